#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nek/fixtures.hpp"
#include "nek/io.hpp"

namespace nek::cli {

namespace {

ReportFormat format_of(const RunConfig& c) {
    return c.machine ? ReportFormat::Machine : ReportFormat::Human;
}

int exit_code_for(const ClassificationReport& r) {
    if (r.has_violation()) return kViolation;
    if (r.has_inconclusive()) return kInconclusive;
    return kOk;
}

std::string one_input(const RunConfig& c) {
    if (c.inputs.size() != 1)
        throw ValidationError("expected exactly one input file");
    return c.inputs.front();
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
    EventSet g = parse_gse_file(one_input(c), c.autoclose);
    ClassificationReport r = classify(g, {{c.clique_cap}, false});
    out << render_classification(r, g, format_of(c));
    return exit_code_for(r);
}

void render_prop(std::vector<std::string>& lines, const EventSet& g, const std::string& key,
                 const PropResult& p, bool machine) {
    if (machine) {
        lines.push_back(key + "=" + flag_name(p.value));
        if (p.value == Flag::False && p.witness) {
            std::string labels;
            for (std::size_t i = 0; i < p.witness->elems.size(); ++i)
                labels += (i ? "," : "") + g.label(p.witness->elems[i]);
            lines.push_back("witness." + key + "=" + labels);
        }
    } else {
        std::string line = key + ": " + flag_name(p.value);
        if (p.witness) {
            line += "  [" + p.witness->kind + ":";
            for (int e : p.witness->elems) line += " " + g.label(e);
            line += "]";
        }
        lines.push_back(line);
    }
}

int cmd_check_gse(const RunConfig& c, const EventSet& g, std::ostream& out) {
    const bool machine = c.machine;
    const SearchCaps caps{c.clique_cap};
    const bool want_all = c.property == "all";
    std::vector<std::string> lines;
    bool inconclusive = false;

    const bool gfe = check_axiom_sum_pairs(g).ok;
    const bool ngfe = check_ngfe(g).value == Flag::True;
    const auto& P = g.induced();
    const bool oml =
        is_orthoposet(P).ok && is_lattice(P).ok && (is_orthomodular(P).ok);

    auto gated = [&](const std::string& key, bool gate, auto&& f) {
        if (!gate) {
            lines.push_back(machine ? key + "=skipped" : key + ": skipped (precondition fails)");
            return;
        }
        PropResult p = f();
        inconclusive = inconclusive || p.value == Flag::Inconclusive;
        render_prop(lines, g, key, p, machine);
    };

    if (want_all || c.property == "P")
        gated("prop_P", true, [&] { return check_property_P(g); });
    if (want_all || c.property == "T")
        gated("prop_T", gfe, [&] { return check_property_T(g); });
    if (want_all || c.property == "U")
        gated("prop_U", ngfe, [&] { return check_property_U(g); });
    if (want_all || c.property == "SJ")
        gated("prop_SJ", gfe && oml, [&] {
            StepwiseJoinReport rep = check_property_SJ(g, caps);
            render_prop(lines, g, "sj_atoms_some", rep.atoms_some_order, machine);
            render_prop(lines, g, "sj_elements_all", rep.elements_all_orders, machine);
            render_prop(lines, g, "sj_elements_some", rep.elements_some_order, machine);
            return rep.atoms_all_orders;
        });

    if (machine) std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) out << l << "\n";
    return inconclusive ? kInconclusive : kOk;
}

int cmd_check_poset(const RunConfig& c, const InvolutivePoset& p, std::ostream& out) {
    std::vector<std::string> lines;
    auto put = [&](const std::string& key, const PosetCheck& chk) {
        if (c.machine) {
            lines.push_back(key + "=" + (chk.ok ? "true" : "false"));
            if (!chk.ok && chk.witness) {
                std::string labels;
                for (std::size_t i = 0; i < chk.witness->elems.size(); ++i)
                    labels += (i ? "," : "") + p.name(chk.witness->elems[i]);
                lines.push_back("witness." + key + "=" + labels);
            }
        } else {
            std::string line = key + ": " + (chk.ok ? "true" : "false");
            if (!chk.ok && chk.witness) {
                line += "  [" + chk.witness->kind + ":";
                for (int e : chk.witness->elems) line += " " + p.name(e);
                line += "]";
            }
            lines.push_back(line);
        }
    };
    const PosetCheck lat = is_lattice(p);
    const PosetCheck ortho = is_orthoposet(p);
    put("lattice", lat);
    put("orthoposet", ortho);
    if (ortho.ok)
        put("orthomodular", is_orthomodular(p));
    else
        lines.push_back(c.machine ? "orthomodular=skipped" : "orthomodular: skipped (not an orthoposet)");
    if (lat.ok)
        put("distributive", is_distributive(p));
    else
        lines.push_back(c.machine ? "distributive=skipped" : "distributive: skipped (not a lattice)");
    if (c.machine) std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) out << l << "\n";
    return kOk;
}

int cmd_check(const RunConfig& c, std::ostream& out) {
    const std::string path = one_input(c);
    if (sniff_kind(path) == FileKind::Gse)
        return cmd_check_gse(c, parse_gse_file(path, c.autoclose), out);
    return cmd_check_poset(c, parse_poset_file(path), out);
}

int cmd_states(const RunConfig& c, std::ostream& out) {
    const std::string path = one_input(c);
    if (sniff_kind(path) == FileKind::Gse) {
        EventSet g = parse_gse_file(path, c.autoclose);
        out << render_state_set(states_of_gse(g), g.induced(), format_of(c));
        return kOk;
    }
    InvolutivePoset p = parse_poset_file(path);
    out << render_synthesis(synthesize_full_proper(p), p, format_of(c));
    return kOk;
}

int cmd_embed(const RunConfig& c, std::ostream& out) {
    InvolutivePoset p = parse_poset_file(one_input(c));
    SynthesisResult res = synthesize_full_proper(p);
    if (res.outcome != SynthesisResult::Outcome::Success) {
        out << render_synthesis(res, p, format_of(c));
        return kOk;
    }
    out << write_gse(embed(p, res.states.members));
    return kOk;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
    if (c.enumerate_n < 2) throw ValidationError("enumeration needs n >= 2");
    if (c.enumerate_n > c.n_max)
        throw ValidationError("enumeration cap exceeded (n > cap); raise --n-max to insist");
    if (c.out_dir) std::filesystem::create_directories(*c.out_dir);
    for (int n = 2; n <= c.enumerate_n; ++n) {
        auto all = enumerate_involutive_posets(n, c.n_max);
        if (c.machine) {
            out << "count.n" << n << "=" << all.size() << "\n";
        } else {
            out << "n=" << n << ": " << all.size()
                << (all.size() == 1 ? " structure\n" : " structures\n");
            for (const auto& p : all) out << write_poset(p);
        }
        if (c.out_dir) {
            for (std::size_t i = 0; i < all.size(); ++i) {
                std::string name =
                    *c.out_dir + "/n" + std::to_string(n) + "_" + std::to_string(i + 1) + ".poset";
                std::ofstream f(name);
                if (!f) throw ValidationError("cannot write '" + name + "'");
                f << write_poset(all[i]);
            }
        }
    }
    return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    Corpus corpus;
    if (c.with_fixtures) {
        for (auto& [name, g] : fixtures::all_gse_fixtures()) corpus.add("fixture/" + name, g);
        for (auto& [name, p] : fixtures::all_poset_fixtures()) corpus.add("fixture/" + name, p);
    }
    for (const auto& path : c.inputs) {
        if (sniff_kind(path) == FileKind::Gse)
            corpus.add(path, parse_gse_file(path, c.autoclose));
        else
            corpus.add(path, parse_poset_file(path));
    }
    if (c.enumerate_corpus_max > c.n_max)
        throw ValidationError("enumeration cap exceeded (n > cap); raise --n-max to insist");
    for (int n = 2; n <= c.enumerate_corpus_max; ++n) {
        auto all = enumerate_involutive_posets(n, c.n_max);
        for (std::size_t i = 0; i < all.size(); ++i)
            corpus.add("enum" + std::to_string(n) + "/" + std::to_string(i + 1),
                       std::move(all[i]));
    }
    for (int i = 0; i < c.random_count; ++i) {
        const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(i);
        corpus.add("random/" + std::to_string(seed),
                   random_gse(c.random_states, c.random_pairs, c.random_den, seed));
    }

    VerificationReport rep = verify_theorems(corpus, {c.clique_cap});
    out << render_verification(rep, format_of(c));
    if (!rep.ok()) return kViolation;
    if (rep.inconclusive) return kInconclusive;
    return kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    RunConfig c = config;
    if (const char* env = std::getenv("NEK_SEED")) {
        try {
            std::size_t pos = 0;
            c.seed = std::stoull(env, &pos);
            if (env[pos] != '\0') throw std::invalid_argument(env);
        } catch (const std::exception&) {
            err << "error: NEK_SEED must be an unsigned integer\n";
            return kInputError;
        }
    }
    try {
        switch (c.command) {
            case Command::Classify: return cmd_classify(c, out);
            case Command::Check: return cmd_check(c, out);
            case Command::States: return cmd_states(c, out);
            case Command::Embed: return cmd_embed(c, out);
            case Command::Enumerate: return cmd_enumerate(c, out);
            case Command::Verify: return cmd_verify(c, out);
        }
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return kViolation;
    }
    return kInputError;
}

int main_entry(int argc, char** argv) {
    CLI::App app{"structure checks and state-set construction for finite sets of events"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_format = [&cfg](CLI::App* sub) {
        sub->add_option("--format", [&cfg](const std::vector<std::string>& vals) {
                if (vals[0] == "machine") cfg.machine = true;
                else if (vals[0] == "human") cfg.machine = false;
                else return false;
                return true;
            }, "output format: human (default) or machine")
            ->type_name("FORMAT");
    };

    auto* classify = app.add_subcommand("classify", "full classification of an event set");
    classify->add_option("file", cfg.inputs, "input .gse file")->required();
    classify->add_flag("--autoclose", cfg.autoclose, "add missing complements while loading");
    classify->add_option("--clique-cap", cfg.clique_cap, "node budget for exponential searches");
    add_format(classify);

    auto* check = app.add_subcommand("check", "individual property checks");
    check->add_option("file", cfg.inputs, "input .gse or .poset file")->required();
    check->add_option("--property", cfg.property, "P, T, U, SJ or all")
        ->check(CLI::IsMember({"P", "T", "U", "SJ", "all"}));
    check->add_flag("--autoclose", cfg.autoclose, "add missing complements while loading");
    check->add_option("--clique-cap", cfg.clique_cap, "node budget for exponential searches");
    add_format(check);

    auto* states = app.add_subcommand("states", "state-set synthesis or extraction");
    states->add_option("file", cfg.inputs, "input .gse or .poset file")->required();
    states->add_flag("--autoclose", cfg.autoclose, "add missing complements while loading");
    add_format(states);

    auto* embed = app.add_subcommand("embed", "realize a poset as a set of events");
    embed->add_option("file", cfg.inputs, "input .poset file")->required();
    add_format(embed);

    auto* enumerate = app.add_subcommand("enumerate", "list structures up to isomorphism");
    enumerate->add_option("n", cfg.enumerate_n, "largest element count (from 2 up)")->required();
    enumerate->add_option("--n-max", cfg.n_max, "refuse element counts above this");
    enumerate->add_option("--out-dir", [&cfg](const std::vector<std::string>& vals) {
        cfg.out_dir = vals[0];
        return true;
    }, "write each structure to DIR/n<k>_<i>.poset")->type_name("DIR");
    add_format(enumerate);

    auto* verify = app.add_subcommand("verify", "replay the cross-check battery over a corpus");
    verify->add_option("files", cfg.inputs, "extra .gse/.poset corpus entries");
    verify->add_flag("--fixtures", cfg.with_fixtures, "include the built-in example sets");
    verify->add_option("--enumerate-max", cfg.enumerate_corpus_max,
                       "add all structures with up to N elements");
    verify->add_option("--random", cfg.random_count, "number of random event sets");
    verify->add_option("--random-states", cfg.random_states, "states per random set");
    verify->add_option("--random-pairs", cfg.random_pairs, "events drawn per random set");
    verify->add_option("--random-den", cfg.random_den, "denominator bound for random values");
    verify->add_option("--seed", cfg.seed, "base seed (NEK_SEED overrides)");
    verify->add_flag("--autoclose", cfg.autoclose, "add missing complements while loading");
    verify->add_option("--clique-cap", cfg.clique_cap, "node budget for exponential searches");
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints help itself; fold usage errors into the input-error code.
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    if (classify->parsed()) cfg.command = Command::Classify;
    if (check->parsed()) cfg.command = Command::Check;
    if (states->parsed()) cfg.command = Command::States;
    if (embed->parsed()) cfg.command = Command::Embed;
    if (enumerate->parsed()) cfg.command = Command::Enumerate;
    if (verify->parsed()) cfg.command = Command::Verify;

    return run(cfg, std::cout, std::cerr);
}

}  // namespace nek::cli
