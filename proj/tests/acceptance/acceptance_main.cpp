// Desk-scale acceptance gate. Each criterion prints exactly one line,
// pass or FAIL with a short reason, and the binary exits nonzero if any
// criterion failed. Tolerances do not exist here: every comparison is an
// exact rational or structural equality.
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "nek/fixtures.hpp"
#include "nek/io.hpp"
#include "nek/oracle.hpp"
#include "nek/states.hpp"
#include "nek/structure.hpp"

using namespace nek;

namespace {

const std::string kFixtureDir = NEK_FIXTURE_DIR;
const std::string kGoldenDir = NEK_GOLDEN_DIR;

// Fixed corpus: the fixtures plus a thousand seeded random sets with at
// most 4 states and at most 12 members (2 constants + 5 drawn events with
// their complements).
struct Instance {
    std::string name;
    EventSet gse;
    ClassificationReport report;
};

std::vector<Instance> build_corpus() {
    std::vector<Instance> corpus;
    for (auto& [name, g] : fixtures::all_gse_fixtures()) {
        ClassificationReport r = classify(g);
        corpus.push_back({name, std::move(g), std::move(r)});
    }
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t seed = 1000 + i;
        EventSet g = random_gse(1 + i % 4, 1 + i % 5, 2 + i % 7, seed);
        ClassificationReport r = classify(g);
        corpus.push_back({"random/" + std::to_string(seed), std::move(g), std::move(r)});
    }
    return corpus;
}

struct Criterion {
    std::string label;
    std::function<std::string()> run;  // empty string = pass, else the reason
};

std::string flag_pair(Flag a, Flag b) {
    return std::string(flag_name(a)) + "/" + flag_name(b);
}

bool both_or_neither(Flag a, Flag b) {
    return (a == Flag::True) == (b == Flag::True) && a != Flag::Inconclusive &&
           b != Flag::Inconclusive;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f.good()) return "<missing file " + path + ">";
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

int main() {
    std::vector<Instance> corpus = build_corpus();

    std::vector<InvolutivePoset> small_posets;
    for (int n = 2; n <= 6; ++n)
        for (auto& p : enumerate_involutive_posets(n)) small_posets.push_back(std::move(p));

    std::vector<Criterion> criteria;

    criteria.push_back({"state-set synthesis and embedding round trip, n <= 6", [&] {
        int embedded = 0, impossible = 0;
        for (const auto& p : small_posets) {
            SynthesisResult res = synthesize_full_proper(p);
            if (res.outcome == SynthesisResult::Outcome::Success) {
                EventSet g = embed(p, res.states.members);
                if (!isomorphic(g.induced(), p)) return std::string("embedding changed the poset");
                ++embedded;
            } else {
                if (vertex_search_full_proper(p).full_proper_exists)
                    return std::string("synthesis said impossible, vertex search disagrees");
                ++impossible;
            }
        }
        if (embedded == 0 || impossible == 0)
            return std::string("sweep degenerated, nothing on one side");
        return std::string();
    }});

    criteria.push_back({"difference closure equivalent to orthogonal pair sums", [&] {
        for (const auto& inst : corpus)
            if (!both_or_neither(inst.report.flag("prop_P"), inst.report.flag("gfe")))
                return inst.name + ": " +
                       flag_pair(inst.report.flag("prop_P"), inst.report.flag("gfe"));
        return std::string();
    }});

    criteria.push_back({"unique clean extensions equivalent to the lattice property", [&] {
        bool saw_true = false, saw_false = false;
        for (const auto& inst : corpus) {
            if (inst.report.flag("gfe") != Flag::True) continue;
            Flag t = inst.report.flag("prop_T");
            Flag lat = inst.report.flag("lattice");
            if (!both_or_neither(t, lat)) return inst.name + ": " + flag_pair(t, lat);
            if (inst.name == "even4") {
                if (t != Flag::True) return std::string("even4 expected true/true");
                saw_true = true;
            }
            if (inst.name == "even6") {
                if (t != Flag::False) return std::string("even6 expected false/false");
                saw_false = true;
            }
        }
        if (!saw_true || !saw_false) return std::string("pinned fixtures missing from corpus");
        return std::string();
    }});

    criteria.push_back({"algebra equivalent to orthogonal atom-sum closure", [&] {
        for (const auto& inst : corpus) {
            if (inst.report.flag("ngfe") != Flag::True) continue;
            Flag alg = inst.report.flag("algebra");
            Flag sums = inst.report.flag("orth_atom_sums");
            if (!both_or_neither(alg, sums)) return inst.name + ": " + flag_pair(alg, sums);
        }
        return std::string();
    }});

    criteria.push_back({"complemented equivalent to all members proper", [&] {
        for (const auto& inst : corpus) {
            Flag c = inst.report.flag("complemented");
            Flag p = inst.report.flag("all_proper");
            if (!both_or_neither(c, p)) return inst.name + ": " + flag_pair(c, p);
            if (inst.name == "single_state" && c != Flag::False)
                return std::string("single_state expected false/false");
            if (inst.name == "mo1" && c != Flag::True)
                return std::string("mo1 expected true/true");
        }
        return std::string();
    }});

    criteria.push_back({"on ortholattices, algebra equivalent to differences as meets", [&] {
        for (const auto& inst : corpus) {
            if (inst.report.flag("ortholattice") != Flag::True) continue;
            Flag alg = inst.report.flag("algebra");
            Flag dm = inst.report.flag("diff_is_meet");
            if (!both_or_neither(alg, dm)) return inst.name + ": " + flag_pair(alg, dm);
            if (inst.name == "hex") {
                if (alg != Flag::False || dm != Flag::False)
                    return std::string("hex expected false/false");
                const Witness& w = inst.report.witnesses.at("diff_is_meet");
                if (inst.gse.label(w.elems[0]) != "a" || inst.gse.label(w.elems[1]) != "b")
                    return std::string("hex witness is not (a,b)");
            }
        }
        return std::string();
    }});

    criteria.push_back({"on proper orthomodular-lattice sum-closed sets, algebra equivalent to stepwise joins", [&] {
        for (const auto& inst : corpus) {
            if (inst.report.flag("gfe") != Flag::True) continue;
            if (inst.report.flag("all_proper") != Flag::True) continue;
            if (inst.report.flag("lattice") != Flag::True) continue;
            if (inst.report.flag("orthomodular") != Flag::True) continue;
            Flag alg = inst.report.flag("algebra");
            Flag sj = inst.report.flag("prop_SJ");
            if (!both_or_neither(alg, sj)) return inst.name + ": " + flag_pair(alg, sj);
            // Both ordering readings must agree on this corpus; a split is
            // reported, not hidden.
            const StepwiseJoinReport& sw = inst.report.stepwise;
            if (sw.atoms_all_orders.value != sw.atoms_some_order.value ||
                sw.elements_all_orders.value != sw.elements_some_order.value)
                return inst.name + ": ordering readings split";
        }
        return std::string();
    }});

    criteria.push_back({"splitting, properness and the three properties force Boolean algebras", [&] {
        int qualified = 0;
        bool even4_excluded = false;
        for (const auto& inst : corpus) {
            bool antecedent = inst.report.flag("ngfe") == Flag::True &&
                              inst.report.flag("all_proper") == Flag::True &&
                              inst.report.flag("prop_P") == Flag::True &&
                              inst.report.flag("prop_U") == Flag::True &&
                              inst.report.flag("prop_T") == Flag::True;
            if (inst.name == "even4") {
                if (antecedent) return std::string("even4 must be excluded");
                if (inst.report.flag("prop_U") != Flag::False)
                    return std::string("even4 exclusion must come from the atom-set order");
                even4_excluded = true;
            }
            if (!antecedent) continue;
            ++qualified;
            for (const char* key :
                 {"algebra", "concrete_representable", "lattice", "orthomodular", "boolean"})
                if (inst.report.flag(key) != Flag::True)
                    return inst.name + ": " + key + " is " +
                           flag_name(inst.report.flag(key));
        }
        // The three Boolean cubes must be among the qualifying instances.
        if (qualified < 3) return std::string("fewer qualifying instances than the cubes");
        if (!even4_excluded) return std::string("even4 missing from corpus");
        return std::string();
    }});

    criteria.push_back({"machine reports byte-identical to the golden files", [&] {
        auto golden = [&](const std::string& name, const std::string& produced) {
            const std::string want = slurp(kGoldenDir + "/" + name);
            if (produced != want) return name + " drifted";
            return std::string();
        };
        for (const char* name : {"EVEN4", "EVEN6", "HEX", "MO1"}) {
            EventSet g = parse_gse_file(kFixtureDir + "/" + name + ".gse", false);
            std::string once = render_classification(classify(g), g, ReportFormat::Machine);
            std::string twice = render_classification(classify(g), g, ReportFormat::Machine);
            if (once != twice) return std::string(name) + " not stable across runs";
            std::string bad = golden(std::string(name) + ".classify.txt", once);
            if (!bad.empty()) return bad;
        }
        InvolutivePoset c3 = parse_poset_file(kFixtureDir + "/3chain.poset");
        std::string synth =
            render_synthesis(synthesize_full_proper(c3), c3, ReportFormat::Machine);
        return golden("3chain.states.txt", synth);
    }});

    criteria.push_back({"exact zero-slack states, MO2 synthesis, pinned 3-chain optimum", [&] {
        for (const auto& p : small_posets) {
            SynthesisResult res = synthesize_full_proper(p);
            if (res.outcome != SynthesisResult::Outcome::Success) continue;
            for (const auto& m : res.states.members)
                if (!is_state(p, m)) return std::string("synthesized vector is not a state");
            if (!is_full(p, res.states.members).ok || !is_proper_set(p, res.states.members).ok)
                return std::string("synthesized set lost its certificates");
        }
        SynthesisResult mo2 = synthesize_full_proper(fixtures::mo_poset(2));
        if (mo2.outcome != SynthesisResult::Outcome::Success || !mo2.states.full ||
            !mo2.states.proper)
            return std::string("MO2 synthesis must produce a full proper set");
        StateOptimum mid =
            optimize_state(build_state_program(fixtures::chain3()), {0, 1, 0});
        if (mid.optimum != Rat(1, 2)) return std::string("3-chain optimum is not 1/2");
        return std::string();
    }});

    criteria.push_back({"enumeration class counts 1/1/2 for n = 2/3/4, filter oracle agreeing up to 5", [&] {
        const std::vector<std::pair<int, std::size_t>> pinned{{2, 1}, {3, 1}, {4, 2}};
        std::string verdict;
        for (auto [n, want] : pinned) {
            std::size_t got = enumerate_involutive_posets(n).size();
            if (got != want) {
                verdict += (verdict.empty() ? "" : "; ");
                verdict += "n=" + std::to_string(n) + " expected " + std::to_string(want) +
                           ", enumerated " + std::to_string(got);
            }
        }
        for (int n = 2; n <= 5; ++n) {
            std::size_t fast = enumerate_involutive_posets(n).size();
            std::size_t slow = enumerate_by_filter(n).size();
            if (fast != slow) {
                verdict += (verdict.empty() ? "" : "; ");
                verdict += "oracle split at n=" + std::to_string(n) + ": " +
                           std::to_string(fast) + " vs " + std::to_string(slow);
            }
        }
        return verdict;
    }});

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string verdict = criteria[i].run();
        if (verdict.empty()) {
            std::printf("criterion %2zu: pass  %s\n", i + 1, criteria[i].label.c_str());
        } else {
            ++failures;
            std::printf("criterion %2zu: FAIL  %s (%s)\n", i + 1, criteria[i].label.c_str(),
                        verdict.c_str());
        }
    }
    if (failures > 0) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
