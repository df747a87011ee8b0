#include "nek/states.hpp"

#include <algorithm>

namespace nek {

bool is_state(const InvolutivePoset& p, const StateVector& m) {
    const int n = p.size();
    if (static_cast<int>(m.values.size()) != n) return false;
    for (const Rat& v : m.values)
        if (v < 0 || v > 1) return false;
    if (m.values[p.bottom()] != 0) return false;
    for (int a = 0; a < n; ++a) {
        if (m.values[p.prime(a)] != 1 - m.values[a]) return false;
        for (int b = 0; b < n; ++b)
            if (p.leq(a, b) && m.values[a] > m.values[b]) return false;
    }
    return true;
}

static void require_states(const InvolutivePoset& p, const std::vector<StateVector>& set) {
    for (const auto& m : set)
        if (!is_state(p, m)) throw PreconditionError("set contains a non-state");
}

FullCheck is_full(const InvolutivePoset& p, const std::vector<StateVector>& set) {
    require_states(p, set);
    const int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (p.leq(a, b)) continue;
            bool separated = false;
            for (const auto& m : set)
                if (m.values[a] > m.values[b]) { separated = true; break; }
            if (!separated) return {false, std::make_pair(a, b)};
        }
    return {};
}

ProperCheck is_proper_set(const InvolutivePoset& p, const std::vector<StateVector>& set) {
    require_states(p, set);
    const int n = p.size();
    for (int e = 0; e < n; ++e) {
        bool strict = false;  // some member values e outside {0,1}
        bool below = false, above = false;
        for (const auto& m : set) {
            const Rat& v = m.values[e];
            if (v != 0 && v != 1) strict = true;
            if (v < rat_half()) below = true;
            if (v > rat_half()) above = true;
        }
        if (strict && !(below && above)) return {false, e};
    }
    return {};
}

SynthesisResult synthesize_full_proper(const InvolutivePoset& p) {
    SynthesisResult res;
    const int n = p.size();
    const StateProgram prog = build_state_program(p);

    std::vector<StateVector> collected;
    auto collect = [&collected](const StateVector& m) {
        if (std::find(collected.begin(), collected.end(), m) == collected.end())
            collected.push_back(m);
    };

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (p.leq(a, b)) continue;
            std::vector<Rat> coeffs(n, Rat(0));
            coeffs[a] += 1;
            coeffs[b] -= 1;
            StateOptimum opt = optimize_state(prog, coeffs);
            res.separations.push_back({a, b, opt.optimum});
            if (opt.optimum <= 0) {
                res.outcome = SynthesisResult::Outcome::NoFullSet;
                res.full_witness = std::make_pair(a, b);
                return res;
            }
            collect(opt.witness);
        }

    for (int e = 0; e < n; ++e) {
        if (e == p.bottom() || e == p.top()) continue;
        std::vector<Rat> down(n, Rat(0)), up(n, Rat(0));
        down[e] = -1;
        up[e] = 1;
        StateOptimum lo = optimize_state(prog, down);
        StateOptimum hi = optimize_state(prog, up);
        const Rat mn = -lo.optimum;
        const Rat mx = hi.optimum;
        res.properness.push_back({e, mn, mx});
        if (mn >= rat_half() || mx <= rat_half()) {
            res.outcome = SynthesisResult::Outcome::NoProperSet;
            res.proper_witness = e;
            return res;
        }
        collect(lo.witness);
        collect(hi.witness);
    }

    // A poset with no incomparable pairs and no inner elements (the 2-chain)
    // runs no programs at all; hand back one vertex so the set is nonempty.
    if (collected.empty())
        collect(optimize_state(prog, std::vector<Rat>(n, Rat(0))).witness);

    res.states.members = std::move(collected);
    res.states.full = true;
    res.states.proper = true;
    // The optima above promise fullness and properness; hold the result to
    // that promise before handing it out.
    if (!is_full(p, res.states.members).ok || !is_proper_set(p, res.states.members).ok)
        throw ConsistencyError("synthesized set fails its own certificates");
    return res;
}

EventSet embed(const InvolutivePoset& p, const std::vector<StateVector>& set) {
    if (!is_full(p, set).ok) throw PreconditionError("embedding requires a full state set");
    if (!is_proper_set(p, set).ok) throw PreconditionError("embedding requires a proper state set");

    const int n = p.size();
    const int k = static_cast<int>(set.size());
    std::vector<std::string> states;
    states.reserve(k);
    for (int s = 1; s <= k; ++s) states.push_back("s" + std::to_string(s));

    std::vector<std::pair<std::string, std::vector<Rat>>> events;
    for (int e = 0; e < n; ++e) {
        std::vector<Rat> row(k);
        for (int s = 0; s < k; ++s) row[s] = set[s].values[e];
        events.emplace_back(p.name(e), std::move(row));
    }
    // The bound elements come out as the constants; build() injects those
    // itself, so skip them here to avoid reserved-label clashes.
    std::vector<std::pair<std::string, std::vector<Rat>>> inner;
    for (int e = 0; e < n; ++e)
        if (e != p.bottom() && e != p.top()) inner.push_back(events[e]);
    EventSet g = EventSet::build(std::move(states), inner, /*autoclose=*/false);

    // Verification: the element map must be an order isomorphism commuting
    // with prime, and every image proper.
    if (g.size() != n) throw ConsistencyError("embedding collapsed distinct elements");
    std::vector<int> image(n);
    for (int e = 0; e < n; ++e) {
        auto idx = g.find_values(events[e].second);
        if (!idx) throw ConsistencyError("embedding lost an element");
        image[e] = *idx;
    }
    for (int a = 0; a < n; ++a) {
        if (g.complement_of(image[a]) != image[p.prime(a)])
            throw ConsistencyError("embedding does not commute with prime");
        if (!is_proper(g.member(image[a])))
            throw ConsistencyError("embedding produced an improper member");
        for (int b = 0; b < n; ++b)
            if (p.leq(a, b) != g.leq(image[a], image[b]))
                throw ConsistencyError("embedding does not preserve the order");
    }
    return g;
}

StateSet states_of_gse(const EventSet& g) {
    const int n = g.size();
    StateSet out;
    for (int s = 0; s < g.num_states(); ++s) {
        StateVector m;
        m.values.resize(n);
        for (int e = 0; e < n; ++e) m.values[e] = g.member(e).values[s];
        if (std::find(out.members.begin(), out.members.end(), m) == out.members.end())
            out.members.push_back(std::move(m));
    }
    FullCheck full = is_full(g.induced(), out.members);
    if (!full.ok) throw ConsistencyError("per-state evaluations are not full");
    out.full = true;
    ProperCheck proper = is_proper_set(g.induced(), out.members);
    if (proper.ok != all_members_proper(g))
        throw ConsistencyError("state-set properness disagrees with member properness");
    out.proper = proper.ok;
    return out;
}

}  // namespace nek
