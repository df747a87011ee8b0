#include "nek/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nek {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        Line line;
        line.number = number;
        std::string tok;
        while (ss >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

Rat parse_value(const std::string& file, const Line& line, const std::string& tok) {
    auto v = parse_rational(tok);
    if (!v) throw ParseError(file, line.number, "malformed value '" + tok + "'");
    if (*v < 0 || *v > 1)
        throw ParseError(file, line.number, "value '" + tok + "' outside [0, 1]");
    return *v;
}

}  // namespace

FileKind sniff_kind(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(path, 0, "empty file");
    const std::string& head = lines.front().tokens.front();
    if (head == "gse") return FileKind::Gse;
    if (head == "poset") return FileKind::Poset;
    throw ParseError(path, lines.front().number, "expected 'gse' or 'poset', got '" + head + "'");
}

EventSet parse_gse(std::istream& in, const std::string& filename, bool autoclose) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(filename, 0, "empty file");
    if (lines[0].tokens != std::vector<std::string>{"gse"})
        throw ParseError(filename, lines[0].number, "expected a lone 'gse' header");

    std::vector<std::string> states;
    std::vector<std::pair<std::string, std::vector<Rat>>> events;
    bool have_states = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& kw = line.tokens[0];
        if (kw == "states") {
            if (have_states) throw ParseError(filename, line.number, "second 'states' line");
            if (line.tokens.size() < 2)
                throw ParseError(filename, line.number, "'states' needs at least one name");
            states.assign(line.tokens.begin() + 1, line.tokens.end());
            have_states = true;
        } else if (kw == "event") {
            if (!have_states)
                throw ParseError(filename, line.number, "'event' before 'states'");
            if (line.tokens.size() < 3 || line.tokens[2] != "=")
                throw ParseError(filename, line.number, "expected 'event <label> = <values>'");
            std::vector<Rat> values;
            for (std::size_t t = 3; t < line.tokens.size(); ++t)
                values.push_back(parse_value(filename, line, line.tokens[t]));
            if (values.size() != states.size())
                throw ParseError(filename, line.number,
                                 "event '" + line.tokens[1] + "' has " +
                                     std::to_string(values.size()) + " values for " +
                                     std::to_string(states.size()) + " states");
            events.emplace_back(line.tokens[1], std::move(values));
        } else {
            throw ParseError(filename, line.number, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_states) throw ParseError(filename, 0, "missing 'states' line");
    try {
        return EventSet::build(std::move(states), events, autoclose);
    } catch (const ValidationError& e) {
        throw ParseError(filename, 0, e.what());
    }
}

EventSet parse_gse_file(const std::string& path, bool autoclose) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_gse(in, path, autoclose);
}

InvolutivePoset parse_poset(std::istream& in, const std::string& filename) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(filename, 0, "empty file");
    if (lines[0].tokens != std::vector<std::string>{"poset"})
        throw ParseError(filename, lines[0].number, "expected a lone 'poset' header");

    std::vector<std::string> names;
    bool have_elements = false;
    auto lookup = [&](const Line& line, const std::string& id) -> int {
        auto it = std::find(names.begin(), names.end(), id);
        if (it == names.end())
            throw ParseError(filename, line.number, "unknown element '" + id + "'");
        return static_cast<int>(it - names.begin());
    };

    std::vector<std::pair<int, int>> gens, primes;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const std::string& kw = line.tokens[0];
        if (kw == "elements") {
            if (have_elements) throw ParseError(filename, line.number, "second 'elements' line");
            if (line.tokens.size() < 2)
                throw ParseError(filename, line.number, "'elements' needs at least one name");
            names.assign(line.tokens.begin() + 1, line.tokens.end());
            have_elements = true;
        } else if (kw == "leq" || kw == "prime") {
            if (!have_elements)
                throw ParseError(filename, line.number, "'" + kw + "' before 'elements'");
            if (line.tokens.size() != 3)
                throw ParseError(filename, line.number, "expected '" + kw + " <a> <b>'");
            int a = lookup(line, line.tokens[1]);
            int b = lookup(line, line.tokens[2]);
            (kw == "leq" ? gens : primes).emplace_back(a, b);
        } else {
            throw ParseError(filename, line.number, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_elements) throw ParseError(filename, 0, "missing 'elements' line");
    if (std::find(names.begin(), names.end(), "0") == names.end() ||
        std::find(names.begin(), names.end(), "1") == names.end())
        throw ParseError(filename, 0, "elements must include '0' and '1'");

    InvolutivePoset p = [&] {
        try {
            return InvolutivePoset::validate(names, gens, primes);
        } catch (const ValidationError& e) {
            throw ParseError(filename, 0, e.what());
        }
    }();
    if (p.name(p.bottom()) != "0")
        throw ParseError(filename, 0, "'0' must name the minimum element");
    if (p.name(p.top()) != "1")
        throw ParseError(filename, 0, "'1' must name the maximum element");
    return p;
}

InvolutivePoset parse_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_poset(in, path);
}

std::string write_gse(const EventSet& g) {
    std::string out = "gse\nstates";
    for (const auto& s : g.states()) out += " " + s;
    out += "\n";
    std::vector<int> order;
    for (int i = 2; i < g.size(); ++i) order.push_back(i);
    std::sort(order.begin(), order.end(),
              [&g](int a, int b) { return g.label(a) < g.label(b); });
    for (int i : order) {
        out += "event " + g.label(i) + " =";
        for (const Rat& v : g.member(i).values) out += " " + rat_to_string(v);
        out += "\n";
    }
    return out;
}

std::string write_poset(const InvolutivePoset& p) {
    std::string out = "poset\nelements";
    for (const auto& n : p.names()) out += " " + n;
    out += "\n";
    for (auto [a, b] : p.covers()) out += "leq " + p.name(a) + " " + p.name(b) + "\n";
    for (int e = 0; e < p.size(); ++e)
        if (e <= p.prime(e)) out += "prime " + p.name(e) + " " + p.name(p.prime(e)) + "\n";
    return out;
}

namespace {

std::string witness_labels(const Witness& w, const EventSet& g) {
    std::string s;
    for (std::size_t i = 0; i < w.elems.size(); ++i) {
        if (i) s += ",";
        s += g.label(w.elems[i]);
    }
    return s;
}

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Ok: return "ok";
        case CheckStatus::Violated: return "violated";
        case CheckStatus::NotApplicable: return "n/a";
    }
    return "?";
}

}  // namespace

std::string render_classification(const ClassificationReport& r, const EventSet& g,
                                  ReportFormat fmt) {
    if (fmt == ReportFormat::Machine) {
        std::vector<std::string> lines;
        lines.push_back("members=" + std::to_string(g.size()));
        lines.push_back("states=" + std::to_string(g.num_states()));
        for (const auto& [key, value] : r.flags) lines.push_back(key + "=" + flag_name(value));
        for (const auto& [key, w] : r.witnesses)
            lines.push_back("witness." + key + "=" + witness_labels(w, g));
        for (const auto& e : r.consistency)
            lines.push_back("consistency." + e.name + "=" + status_name(e.status));
        lines.push_back(std::string("consistency=") + (r.has_violation() ? "violated" : "ok"));
        std::sort(lines.begin(), lines.end());
        std::string out;
        for (const auto& l : lines) out += l + "\n";
        return out;
    }

    std::string out = "event set with " + std::to_string(g.size()) + " members over " +
                      std::to_string(g.num_states()) + " states\n";
    for (const auto& [key, value] : r.flags) {
        out += "  " + key + ": " + flag_name(value);
        if (auto it = r.witnesses.find(key); it != r.witnesses.end())
            out += "  [" + it->second.kind + ": " + witness_labels(it->second, g) + "]";
        out += "\n";
    }
    int applicable = 0, violated = 0;
    for (const auto& e : r.consistency) {
        if (e.status == CheckStatus::NotApplicable) continue;
        ++applicable;
        if (e.status == CheckStatus::Violated) {
            ++violated;
            out += "  cross-check violated: " + e.name + " (" + e.detail + ")\n";
        }
    }
    out += violated ? "cross-checks: " + std::to_string(violated) + " of " +
                          std::to_string(applicable) + " applicable checks violated\n"
                    : "cross-checks: all " + std::to_string(applicable) + " applicable checks ok\n";
    return out;
}

namespace {

std::string state_values(const StateVector& m) {
    std::string s;
    for (std::size_t i = 0; i < m.values.size(); ++i) {
        if (i) s += ",";
        s += rat_to_string(m.values[i]);
    }
    return s;
}

std::string machine_states(const std::vector<StateVector>& members) {
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i)
        out += "state." + std::to_string(i + 1) + "=" + state_values(members[i]) + "\n";
    return out;
}

std::string human_states(const std::vector<StateVector>& members, const InvolutivePoset& p) {
    std::string out;
    for (std::size_t i = 0; i < members.size(); ++i) {
        out += "  state " + std::to_string(i + 1) + ":";
        for (int e = 0; e < p.size(); ++e)
            out += " " + p.name(e) + "=" + rat_to_string(members[i].values[e]);
        out += "\n";
    }
    return out;
}

}  // namespace

std::string render_synthesis(const SynthesisResult& res, const InvolutivePoset& p,
                             ReportFormat fmt) {
    using Outcome = SynthesisResult::Outcome;
    if (fmt == ReportFormat::Machine) {
        std::vector<std::string> lines;
        switch (res.outcome) {
            case Outcome::Success: lines.push_back("outcome=success"); break;
            case Outcome::NoFullSet: lines.push_back("outcome=no-full-set"); break;
            case Outcome::NoProperSet: lines.push_back("outcome=no-proper-set"); break;
        }
        for (const auto& s : res.separations)
            lines.push_back("separation." + p.name(s.p) + "." + p.name(s.q) + "=" +
                            rat_to_string(s.optimum));
        for (const auto& pr : res.properness)
            lines.push_back("properness." + p.name(pr.elem) + "=" + rat_to_string(pr.min) + "," +
                            rat_to_string(pr.max));
        if (res.full_witness)
            lines.push_back("witness=" + p.name(res.full_witness->first) + "," +
                            p.name(res.full_witness->second));
        if (res.proper_witness) lines.push_back("witness=" + p.name(*res.proper_witness));
        std::string body = machine_states(res.states.members);
        std::string out;
        std::sort(lines.begin(), lines.end());
        for (const auto& l : lines) out += l + "\n";
        return out + body;
    }

    std::string out;
    switch (res.outcome) {
        case Outcome::Success:
            out += "full and proper state set with " + std::to_string(res.states.members.size()) +
                   " members\n";
            out += human_states(res.states.members, p);
            break;
        case Outcome::NoFullSet:
            out += "impossible no-full-set " + p.name(res.full_witness->first) + " " +
                   p.name(res.full_witness->second) + "\n";
            break;
        case Outcome::NoProperSet:
            out += "impossible no-proper-set " + p.name(*res.proper_witness) + "\n";
            break;
    }
    for (const auto& s : res.separations)
        out += "  sep " + p.name(s.p) + " " + p.name(s.q) +
               " optimum=" + rat_to_string(s.optimum) + "\n";
    for (const auto& pr : res.properness)
        out += "  range " + p.name(pr.elem) + " = [" + rat_to_string(pr.min) + ", " +
               rat_to_string(pr.max) + "]\n";
    return out;
}

std::string render_state_set(const StateSet& s, const InvolutivePoset& p, ReportFormat fmt) {
    if (fmt == ReportFormat::Machine) {
        std::string out;
        out += std::string("full=") + (s.full ? "true" : "false") + "\n";
        out += std::string("proper=") + (s.proper ? "true" : "false") + "\n";
        return out + machine_states(s.members);
    }
    std::string out = "canonical states: " + std::to_string(s.members.size()) +
                      (s.full ? ", full" : ", not full") +
                      (s.proper ? ", proper" : ", not proper") + "\n";
    return out + human_states(s.members, p);
}

std::string render_verification(const VerificationReport& rep, ReportFormat fmt) {
    if (fmt == ReportFormat::Machine) {
        std::vector<std::string> lines;
        int total = 0;
        for (const auto& s : rep.stats) {
            lines.push_back("checked." + s.name + "=" + std::to_string(s.checked));
            lines.push_back("violations." + s.name + "=" + std::to_string(s.violations));
            total += s.violations;
        }
        lines.push_back("violations=" + std::to_string(total));
        lines.push_back(std::string("inconclusive=") + (rep.inconclusive ? "true" : "false"));
        std::sort(lines.begin(), lines.end());
        std::string out;
        for (const auto& l : lines) out += l + "\n";
        return out;
    }
    std::string out;
    for (const auto& s : rep.stats) {
        if (s.checked == 0) continue;
        out += "  " + s.name + ": " + std::to_string(s.checked) + " checked";
        if (s.violations) out += ", " + std::to_string(s.violations) + " VIOLATED";
        out += "\n";
    }
    for (const auto& v : rep.violations)
        out += "violation: " + v.theorem + " on " + v.instance + ": " + v.detail + "\n";
    out += rep.ok() ? "all checks passed\n" : "violations found\n";
    if (rep.inconclusive) out += "note: some searches hit their caps\n";
    return out;
}

}  // namespace nek
