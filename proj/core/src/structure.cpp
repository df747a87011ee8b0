#include "nek/structure.hpp"

#include <algorithm>
#include <set>

namespace nek {

const char* flag_name(Flag f) {
    switch (f) {
        case Flag::True: return "true";
        case Flag::False: return "false";
        case Flag::Skipped: return "skipped";
        case Flag::Inconclusive: return "inconclusive";
    }
    return "?";
}

PropResult check_property_P(const EventSet& g) {
    const int n = g.size();
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (!g.leq(p, q)) continue;
            if (!g.find(event_diff(g.member(q), g.member(p))))
                return prop_false({"difference-missing", {p, q}});
        }
    return prop_true();
}

// Does member(i) + member(j) equal member(p) exactly?
static bool splits_into(const EventSet& g, int p, int i, int j) {
    for (int s = 0; s < g.num_states(); ++s)
        if (g.member(i).values[s] + g.member(j).values[s] != g.member(p).values[s]) return false;
    return true;
}

PropResult check_ngfe(const EventSet& g) {
    const int n = g.size();
    for (int p = 0; p < n; ++p) {
        if (p == g.zero() || g.induced().is_atom(p)) continue;
        bool found = false;
        for (int i = 1; i < n && !found; ++i)
            for (int j = i; j < n; ++j)
                if (splits_into(g, p, i, j)) { found = true; break; }
        if (!found) return prop_false({"no-splitting", {p}});
    }
    return prop_true();
}

static void require_ngfe(const EventSet& g, const char* what) {
    if (check_ngfe(g).value != Flag::True)
        throw PreconditionError(std::string(what) + " requires the splitting property");
}

DecompResult atom_decomposition(const EventSet& g, int p) {
    require_ngfe(g, "atom decomposition");
    if (p == g.zero()) throw PreconditionError("zero has no atom decomposition");

    DecompResult out;
    const int n = g.size();
    auto split = [&](auto&& self, int e) -> void {
        if (g.induced().is_atom(e)) {
            out.atom_multiset.push_back(e);
            return;
        }
        for (int i = 1; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (splits_into(g, e, i, j)) {
                    self(self, i);
                    self(self, j);
                    return;
                }
        throw ConsistencyError("splitting failed below a splittable member");
    };
    split(split, p);
    std::sort(out.atom_multiset.begin(), out.atom_multiset.end());
    out.repeats = std::adjacent_find(out.atom_multiset.begin(), out.atom_multiset.end()) !=
                  out.atom_multiset.end();
    if (!out.repeats) out.atoms = out.atom_multiset;
    return out;
}

std::vector<std::vector<int>> all_atom_decompositions(const EventSet& g, int p) {
    require_ngfe(g, "atom decomposition");
    if (p == g.zero()) throw PreconditionError("zero has no atom decomposition");

    const std::vector<int> atoms = g.induced().atoms();
    const int k = g.num_states();
    const auto& target = g.member(p).values;

    std::vector<std::vector<int>> out;
    std::vector<int> chosen;
    std::vector<Rat> sum(k, Rat(0));
    auto dfs = [&](auto&& self, std::size_t start) -> void {
        if (sum == target) {
            out.push_back(chosen);
            return;  // extending a full sum can only overshoot
        }
        for (std::size_t t = start; t < atoms.size(); ++t) {
            const auto& av = g.member(atoms[t]).values;
            bool fits = true;
            for (int s = 0; s < k && fits; ++s) fits = sum[s] + av[s] <= target[s];
            if (!fits) continue;
            for (int s = 0; s < k; ++s) sum[s] += av[s];
            chosen.push_back(atoms[t]);
            self(self, t + 1);
            chosen.pop_back();
            for (int s = 0; s < k; ++s) sum[s] -= av[s];
        }
    };
    dfs(dfs, 0);
    return out;
}

PropResult check_property_U(const EventSet& g) {
    require_ngfe(g, "property U");
    const int n = g.size();
    std::vector<std::vector<std::vector<int>>> decomps(n);
    for (int p = 1; p < n; ++p) {
        decomps[p] = all_atom_decompositions(g, p);
        // Without a duplicate-free decomposition the atom-set comparison is
        // undefined for p, which we count against the property.
        if (decomps[p].empty()) return prop_false({"no-atom-decomposition", {p}});
    }
    for (int p = 1; p < n; ++p)
        for (int q = 1; q < n; ++q)
            for (const auto& ap : decomps[p])
                for (const auto& aq : decomps[q]) {
                    bool subset =
                        std::includes(aq.begin(), aq.end(), ap.begin(), ap.end());
                    if (g.leq(p, q) != subset)
                        return prop_false({"order-subset-mismatch", {p, q}});
                }
    return prop_true();
}

ConcreteRepresentation concrete_representation(const EventSet& g) {
    require_ngfe(g, "concrete representation");
    if (check_property_U(g).value != Flag::True)
        throw PreconditionError("concrete representation requires property U");

    const int n = g.size();
    ConcreteRepresentation rep;
    rep.atom_sets.resize(n);
    for (int p = 1; p < n; ++p) {
        auto all = all_atom_decompositions(g, p);
        if (all.size() != 1)
            throw ConsistencyError("atom decomposition of '" + g.label(p) + "' is not unique");
        rep.atom_sets[p] = all[0];
    }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            bool subset = std::includes(rep.atom_sets[q].begin(), rep.atom_sets[q].end(),
                                        rep.atom_sets[p].begin(), rep.atom_sets[p].end());
            if (g.leq(p, q) != subset)
                throw ConsistencyError("atom sets do not mirror the member order");
        }
    if (rep.atom_sets[g.one()] != g.induced().atoms())
        throw ConsistencyError("the unit does not decompose into all atoms");
    if (all_members_proper(g)) {
        for (int p = 0; p < n; ++p) {
            std::vector<int> diff;
            std::set_difference(rep.atom_sets[g.one()].begin(), rep.atom_sets[g.one()].end(),
                                rep.atom_sets[p].begin(), rep.atom_sets[p].end(),
                                std::back_inserter(diff));
            if (diff != rep.atom_sets[g.complement_of(p)])
                throw ConsistencyError("complement atom set is not the set complement");
        }
    }
    return rep;
}

PropResult check_property_T(const EventSet& g) {
    if (check_property_P(g).value != Flag::True)
        throw PreconditionError("property T requires closedness under differences");
    const int n = g.size();
    const int k = g.num_states();
    for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) {
            int count = 0;
            for (int r = 0; r < n; ++r) {
                if (!g.leq(p, r) || !g.leq(q, r)) continue;
                // r is admissible when no nonzero member sits below both
                // r - p and r - q (the infimum of the differences, taken
                // within the member set, is zero).
                bool clean = true;
                for (int u = 1; u < n && clean; ++u) {
                    bool below_both = true;
                    for (int s = 0; s < k && below_both; ++s) {
                        const Rat& uv = g.member(u).values[s];
                        below_both = uv <= g.member(r).values[s] - g.member(p).values[s] &&
                                     uv <= g.member(r).values[s] - g.member(q).values[s];
                    }
                    if (below_both) clean = false;
                }
                if (clean) ++count;
            }
            if (count == 0) return prop_false({"no-clean-extension", {p, q}});
            if (count > 1) return prop_false({"extension-not-unique", {p, q}});
        }
    return prop_true();
}

PropResult check_orth_atom_sums(const EventSet& g, const SearchCaps& caps) {
    // Multisets matter here: an atom a with a orthogonal to itself admits
    // sums a + a + ... that the closure must also contain (or that overflow
    // 1, which refutes closure just the same). Such atoms only exist in
    // improper sets, so on complemented input this degenerates to plain
    // subsets.
    const std::vector<int> atoms = g.induced().atoms();
    const int k = g.num_states();

    std::uint64_t nodes = 0;
    bool capped = false;
    std::optional<Witness> bad;
    std::vector<int> multiset;
    std::vector<Rat> sum(k, Rat(0));

    auto dfs = [&](auto&& self, std::size_t start) -> bool {
        for (std::size_t t = start; t < atoms.size(); ++t) {
            int a = atoms[t];
            bool orth = true;
            for (int b : multiset)
                if (!g.orthogonal_members(a, b)) { orth = false; break; }
            if (!orth) continue;
            if (++nodes > caps.clique_nodes) { capped = true; return false; }
            multiset.push_back(a);
            for (int s = 0; s < k; ++s) sum[s] += g.member(a).values[s];
            bool overflow = false;
            for (int s = 0; s < k && !overflow; ++s) overflow = sum[s] > 1;
            if (overflow || !g.find_values(sum)) {
                bad = Witness{"atom-sum-missing", multiset};
                return false;
            }
            if (!self(self, t)) return false;  // same index again: repeats allowed
            for (int s = 0; s < k; ++s) sum[s] -= g.member(a).values[s];
            multiset.pop_back();
        }
        return true;
    };
    dfs(dfs, 0);
    if (capped) return {Flag::Inconclusive, std::nullopt};
    if (bad) return prop_false(*bad);
    return prop_true();
}

static void require_gfe_oml(const EventSet& g, const char* what) {
    if (check_axiom_sum_pairs(g).ok == false)
        throw PreconditionError(std::string(what) + " requires closure under orthogonal sums");
    const auto& P = g.induced();
    if (!is_orthoposet(P).ok || !is_lattice(P).ok || !is_orthomodular(P).ok)
        throw PreconditionError(std::string(what) + " requires an orthomodular lattice");
}

SequenceCheck check_stepwise_joins(const EventSet& g, const std::vector<int>& seq) {
    require_gfe_oml(g, "the stepwise-join condition");
    if (seq.empty()) throw PreconditionError("empty sequence");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] == g.zero()) throw PreconditionError("sequence members must be nonzero");
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (!g.orthogonal_members(seq[i], seq[j]))
                throw PreconditionError("sequence members must be pairwise orthogonal");
    }

    SequenceCheck out;
    const int k = g.num_states();
    std::vector<Rat> sum = g.member(seq[0]).values;
    int prev = seq[0];
    int join_so_far = seq[0];
    for (std::size_t m = 1; m < seq.size(); ++m) {
        for (int s = 0; s < k; ++s) sum[s] += g.member(seq[m]).values[s];
        bool overflow = false;
        for (int s = 0; s < k && !overflow; ++s) overflow = sum[s] > 1;
        auto cur = overflow ? std::nullopt : g.find_values(sum);
        if (!cur) {
            out.ok = false;
            out.failed_at = static_cast<int>(m);
            return out;
        }
        auto mt = g.induced().meet(*cur, g.complement_of(prev));
        if (!mt || *mt != seq[m]) {
            out.ok = false;
            out.failed_at = static_cast<int>(m);
            return out;
        }
        auto jn = g.induced().join(join_so_far, seq[m]);
        if (!jn || *jn != *cur) out.partial_sums_are_joins = false;
        join_so_far = *cur;
        prev = *cur;
    }
    return out;
}

namespace {

// Shared walker for the stepwise-join readings over one candidate pool.
// Walks every ordered sequence of distinct, pairwise orthogonal pool members
// whose proper prefixes all pass, recording failures (for the all-orders
// reading) and the underlying sets of fully passing sequences (for the
// some-order reading). Under the gfe/orthomodular precondition no nonzero
// member is orthogonal to itself, so sequences cannot repeat members.
struct StepwiseWalk {
    const EventSet& g;
    const std::vector<int>& pool;
    std::uint64_t budget;

    std::uint64_t nodes = 0;
    bool capped = false;
    bool joins_ok = true;
    std::optional<Witness> first_failure;
    std::set<std::vector<int>> passing_sets;

    std::vector<int> seq;
    std::vector<bool> used;
    std::vector<Rat> sum;

    void run() {
        used.assign(pool.size(), false);
        sum.assign(g.num_states(), Rat(0));
        extend(-1, -1);
    }

    // prev/joined are the member index of the previous partial sum and of
    // the running join, or -1 at the root.
    void extend(int prev, int joined) {
        for (std::size_t t = 0; t < pool.size(); ++t) {
            if (capped) return;
            if (used[t]) continue;
            const int a = pool[t];
            bool orth = true;
            for (int b : seq)
                if (!g.orthogonal_members(a, b)) { orth = false; break; }
            if (!orth) continue;
            if (++nodes > budget) { capped = true; return; }

            seq.push_back(a);
            for (int s = 0; s < g.num_states(); ++s) sum[s] += g.member(a).values[s];

            bool pass = true;
            int cur = a;
            int joined2 = a;
            if (seq.size() >= 2) {
                bool overflow = false;
                for (int s = 0; s < g.num_states() && !overflow; ++s) overflow = sum[s] > 1;
                auto found = overflow ? std::nullopt : g.find_values(sum);
                if (!found) {
                    pass = false;
                } else {
                    cur = *found;
                    auto mt = g.induced().meet(cur, g.complement_of(prev));
                    pass = mt && *mt == a;
                    auto jn = g.induced().join(joined, a);
                    joined2 = jn ? *jn : cur;
                    if (pass && (!jn || *jn != cur)) joins_ok = false;
                }
            }
            if (pass) {
                std::vector<int> key = seq;
                std::sort(key.begin(), key.end());
                passing_sets.insert(std::move(key));
                used[t] = true;
                extend(cur, joined2);
                used[t] = false;
            } else if (!first_failure) {
                first_failure = Witness{"stepwise-join", seq};
            }
            for (int s = 0; s < g.num_states(); ++s) sum[s] -= g.member(a).values[s];
            seq.pop_back();
        }
    }

    // First orthogonal subset (lexicographic, ascending) with no passing
    // ordering at all.
    std::optional<Witness> unordered_gap() {
        std::vector<int> sub;
        std::optional<Witness> gap;
        auto dfs = [&](auto&& self, std::size_t start) -> bool {
            for (std::size_t t = start; t < pool.size(); ++t) {
                if (capped) return false;
                bool orth = true;
                for (int b : sub)
                    if (!g.orthogonal_members(pool[t], b)) { orth = false; break; }
                if (!orth) continue;
                if (++nodes > budget) { capped = true; return false; }
                sub.push_back(pool[t]);
                if (sub.size() >= 2 && !passing_sets.count(sub)) {
                    std::vector<int> key = sub;
                    gap = Witness{"no-passing-order", key};
                    return false;
                }
                if (!self(self, t + 1)) return false;
                sub.pop_back();
            }
            return true;
        };
        dfs(dfs, 0);
        return gap;
    }
};

PropResult walk_reading(StepwiseWalk& w, bool all_orders) {
    if (w.capped) return {Flag::Inconclusive, std::nullopt};
    if (all_orders) {
        if (w.first_failure) return prop_false(*w.first_failure);
        return prop_true();
    }
    auto gap = w.unordered_gap();
    if (w.capped) return {Flag::Inconclusive, std::nullopt};
    if (gap) return prop_false(*gap);
    return prop_true();
}

}  // namespace

StepwiseJoinReport check_property_SJ(const EventSet& g, const SearchCaps& caps) {
    require_gfe_oml(g, "the stepwise-join property");

    StepwiseJoinReport rep;
    const std::vector<int> atom_pool = g.induced().atoms();
    std::vector<int> elem_pool;
    for (int i = 0; i < g.size(); ++i)
        if (i != g.zero()) elem_pool.push_back(i);

    {
        StepwiseWalk w{g, atom_pool, caps.clique_nodes};
        w.run();
        rep.atoms_all_orders = walk_reading(w, true);
        rep.atoms_some_order = walk_reading(w, false);
        rep.partial_sums_are_joins = rep.partial_sums_are_joins && w.joins_ok;
    }
    {
        StepwiseWalk w{g, elem_pool, caps.clique_nodes};
        w.run();
        rep.elements_all_orders = walk_reading(w, true);
        rep.elements_some_order = walk_reading(w, false);
        rep.partial_sums_are_joins = rep.partial_sums_are_joins && w.joins_ok;
    }
    return rep;
}

PropResult check_diff_is_meet(const EventSet& g) {
    const auto& P = g.induced();
    if (!is_orthoposet(P).ok || !is_lattice(P).ok)
        throw PreconditionError("the difference/meet condition requires an ortholattice");
    const int n = g.size();
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (!g.leq(p, q)) continue;
            auto d = g.find(event_diff(g.member(q), g.member(p)));
            if (!d) return prop_false({"difference-missing", {p, q}});
            auto mt = P.meet(q, P.prime(p));
            if (!mt || *mt != *d) return prop_false({"difference-not-meet", {p, q}});
        }
    return prop_true();
}

bool ClassificationReport::has_violation() const {
    return std::any_of(consistency.begin(), consistency.end(),
                       [](const ConsistencyEntry& e) { return e.status == CheckStatus::Violated; });
}

bool ClassificationReport::has_inconclusive() const {
    return std::any_of(flags.begin(), flags.end(),
                       [](const auto& kv) { return kv.second == Flag::Inconclusive; });
}

ClassificationReport classify(const EventSet& g, const ClassifyOptions& opts) {
    ClassificationReport r;
    auto set_flag = [&r](const std::string& key, bool ok, std::optional<Witness> w) {
        r.flags[key] = ok ? Flag::True : Flag::False;
        if (!ok && w) r.witnesses[key] = *w;
    };
    auto set_prop = [&r](const std::string& key, const PropResult& p) {
        r.flags[key] = p.value;
        if (p.value == Flag::False && p.witness) r.witnesses[key] = *p.witness;
    };

    const auto& P = g.induced();

    const PosetCheck ax_pairs = check_axiom_sum_pairs(g);
    const PosetCheck ax_triples = check_axiom_sum_triples(g);
    set_flag("gfe", ax_pairs.ok, ax_pairs.witness);
    set_flag("algebra", ax_pairs.ok && ax_triples.ok,
             !ax_pairs.ok ? ax_pairs.witness : ax_triples.witness);

    const PosetCheck lat = is_lattice(P);
    set_flag("lattice", lat.ok, lat.witness);
    const PosetCheck ortho = is_orthoposet(P);
    set_flag("complemented", ortho.ok, ortho.witness);

    std::optional<Witness> improper;
    for (int i = 0; i < g.size() && !improper; ++i)
        if (!is_proper(g.member(i))) improper = Witness{"improper-member", {i}};
    set_flag("all_proper", !improper.has_value(), improper);

    set_flag("ortholattice", lat.ok && ortho.ok, !lat.ok ? lat.witness : ortho.witness);

    PosetCheck oml{false, ortho.witness};
    if (ortho.ok) oml = is_orthomodular(P);
    set_flag("orthomodular", oml.ok, oml.witness);

    if (!lat.ok) {
        set_flag("boolean", false, lat.witness);
    } else if (!ortho.ok) {
        set_flag("boolean", false, ortho.witness);
    } else {
        const PosetCheck dist = is_distributive(P);
        set_flag("boolean", dist.ok, dist.witness);
    }

    std::optional<Witness> non_indicator;
    for (int i = 0; i < g.size() && !non_indicator; ++i)
        for (const Rat& v : g.member(i).values)
            if (v != 0 && v != 1) { non_indicator = Witness{"non-indicator", {i}}; break; }
    set_flag("concrete_valued", !non_indicator.has_value(), non_indicator);

    const PropResult ngfe = check_ngfe(g);
    set_prop("ngfe", ngfe);

    const PropResult prop_p = check_property_P(g);
    set_prop("prop_P", prop_p);

    if (ax_pairs.ok) {
        set_prop("prop_T", check_property_T(g));
    } else {
        r.flags["prop_T"] = Flag::Skipped;
    }

    if (ngfe.value == Flag::True) {
        set_prop("prop_U", check_property_U(g));
    } else {
        r.flags["prop_U"] = Flag::Skipped;
    }

    set_prop("orth_atom_sums", check_orth_atom_sums(g, opts.caps));

    const bool oml_lattice = lat.ok && ortho.ok && oml.ok;
    if (ax_pairs.ok && oml_lattice) {
        r.stepwise = check_property_SJ(g, opts.caps);
        set_prop("prop_SJ", r.stepwise.atoms_all_orders);
        set_prop("sj_atoms_some", r.stepwise.atoms_some_order);
        set_prop("sj_elements_all", r.stepwise.elements_all_orders);
        set_prop("sj_elements_some", r.stepwise.elements_some_order);
    } else {
        r.flags["prop_SJ"] = Flag::Skipped;
    }

    if (lat.ok && ortho.ok) {
        set_prop("diff_is_meet", check_diff_is_meet(g));
    } else {
        r.flags["diff_is_meet"] = Flag::Skipped;
    }

    // Concrete representability, together with the uniqueness cross-check.
    CheckStatus unique_status = CheckStatus::NotApplicable;
    std::string unique_detail;
    if (ngfe.value == Flag::True && r.flags["prop_U"] == Flag::True) {
        try {
            concrete_representation(g);
            r.flags["concrete_representable"] = Flag::True;
            unique_status = CheckStatus::Ok;
        } catch (const ConsistencyError& e) {
            r.flags["concrete_representable"] = Flag::False;
            r.witnesses["concrete_representable"] = Witness{"representation-failure", {}};
            unique_status = CheckStatus::Violated;
            unique_detail = e.what();
        }
    } else {
        bool ngfe_ok = ngfe.value == Flag::True;
        set_flag("concrete_representable", false,
                 !ngfe_ok ? ngfe.witness
                          : (r.witnesses.count("prop_U")
                                 ? std::optional<Witness>(r.witnesses.at("prop_U"))
                                 : std::nullopt));
    }

    // Cross-checks. Each one has a premise; when the premise does not hold
    // the entry stays NotApplicable.
    auto entry = [&r, &opts](const std::string& name, bool applicable, bool ok,
                             const std::string& detail) {
        ConsistencyEntry e{name, CheckStatus::NotApplicable, ""};
        if (applicable) {
            e.status = ok ? CheckStatus::Ok : CheckStatus::Violated;
            if (!ok) e.detail = detail;
        }
        if (e.status == CheckStatus::Violated && opts.fail_hard)
            throw ConsistencyError(name + ": " + detail);
        r.consistency.push_back(std::move(e));
    };

    const Flag sums = r.flags["orth_atom_sums"];
    const bool proper = !improper.has_value();

    entry("triple_sum_implies_pair_sum", ax_triples.ok, ax_pairs.ok,
          "triple closure holds but pair closure fails");
    entry("pair_sum_implies_splitting", ax_pairs.ok, ngfe.value == Flag::True,
          "sum-closed set without the splitting property");
    entry("diff_closed_iff_pair_sum", true, (prop_p.value == Flag::True) == ax_pairs.ok,
          "difference closure disagrees with sum closure");
    entry("complemented_iff_all_proper", true, ortho.ok == proper,
          "complementation disagrees with properness");

    {
        // With triple closure, p + q must be the join of any orthogonal pair.
        bool ok = true;
        std::string detail;
        if (ax_triples.ok) {
            const int n = g.size();
            for (int i = 0; i < n && ok; ++i)
                for (int j = i; j < n && ok; ++j) {
                    if (!g.orthogonal_members(i, j)) continue;
                    auto s = g.find(event_sum(g.member(i), g.member(j)));
                    auto jn = P.join(i, j);
                    if (!s || !jn || *s != *jn) {
                        ok = false;
                        detail = "sum of '" + g.label(i) + "' and '" + g.label(j) +
                                 "' is not their join";
                    }
                }
        }
        entry("orth_sum_is_join", ax_triples.ok, ok, detail);
    }

    entry("algebra_iff_atom_sums",
          ngfe.value == Flag::True && sums != Flag::Inconclusive,
          (r.flags["algebra"] == Flag::True) == (sums == Flag::True),
          "atom-sum closure disagrees with the membership axioms");
    entry("lattice_iff_unique_extension", ax_pairs.ok,
          (r.flags["prop_T"] == Flag::True) == lat.ok,
          "unique-extension property disagrees with lattice structure");
    entry("unique_atom_decomposition", unique_status != CheckStatus::NotApplicable,
          unique_status == CheckStatus::Ok, unique_detail);

    entry("ortholattice_diff_meet", lat.ok && ortho.ok,
          (r.flags["algebra"] == Flag::True) == (r.flags["diff_is_meet"] == Flag::True) &&
              (r.flags["algebra"] != Flag::True || oml.ok),
          "difference/meet condition disagrees with the membership axioms");

    {
        const bool sj_premise = ax_pairs.ok && proper && oml_lattice;
        const Flag sj = r.flags["prop_SJ"];
        entry("stepwise_join_decides_algebra",
              sj_premise && sj != Flag::Inconclusive && sj != Flag::Skipped,
              (r.flags["algebra"] == Flag::True) == (sj == Flag::True),
              "stepwise-join property disagrees with the membership axioms");
        bool computed = sj != Flag::Inconclusive && sj != Flag::Skipped &&
                        r.stepwise.atoms_some_order.value != Flag::Inconclusive &&
                        r.stepwise.elements_all_orders.value != Flag::Inconclusive &&
                        r.stepwise.elements_some_order.value != Flag::Inconclusive;
        entry("stepwise_readings_agree", sj_premise && computed,
              computed && sj == r.stepwise.atoms_some_order.value &&
                  sj == r.stepwise.elements_all_orders.value &&
                  sj == r.stepwise.elements_some_order.value,
              "stepwise-join readings split");
        entry("partial_sums_are_joins", sj != Flag::Skipped && sj != Flag::Inconclusive,
              r.stepwise.partial_sums_are_joins, "a passing partial sum is not the prefix join");
    }

    {
        const bool premise = ngfe.value == Flag::True && proper &&
                             prop_p.value == Flag::True &&
                             r.flags["prop_T"] == Flag::True && r.flags["prop_U"] == Flag::True;
        bool ok = r.flags["algebra"] == Flag::True &&
                  r.flags["concrete_representable"] == Flag::True && lat.ok && oml.ok &&
                  r.flags["boolean"] == Flag::True;
        entry("properties_force_boolean", premise, ok,
              "properties P, T, U on a proper set failed to force a Boolean algebra");
    }

    entry("concrete_pair_sum_algebra",
          ax_pairs.ok && r.flags["concrete_valued"] == Flag::True,
          r.flags["algebra"] == Flag::True, "a concrete sum-closed set is not an algebra");

    return r;
}

}  // namespace nek
