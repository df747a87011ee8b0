#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nek/events.hpp"

namespace nek {

enum class Flag { True, False, Skipped, Inconclusive };

const char* flag_name(Flag f);

struct PropResult {
    Flag value = Flag::True;
    std::optional<Witness> witness;
};

inline PropResult prop_true() { return {Flag::True, std::nullopt}; }
inline PropResult prop_false(Witness w) { return {Flag::False, std::move(w)}; }

// Hard limits for the exponential searches. A hit turns the result into
// Flag::Inconclusive instead of running forever.
struct SearchCaps {
    std::uint64_t clique_nodes = 1'000'000;
};

// p <= q implies q - p is a member. Witness: first ordered pair failing.
PropResult check_property_P(const EventSet& g);

// Every nonzero non-atom splits as a sum of two nonzero members.
// Witness: first unsplittable member.
PropResult check_ngfe(const EventSet& g);

// Result of the deterministic greedy decomposition: repeatedly split the
// first splittable pair. `atom_multiset` keeps every atom occurrence; when
// an atom repeats there is no set-valued decomposition and `atoms` is empty.
struct DecompResult {
    bool repeats = false;
    std::vector<int> atoms;          // sorted, duplicate-free; empty if repeats
    std::vector<int> atom_multiset;  // sorted, with multiplicity
};

// pre: g is ngfe and p is a nonzero member.
DecompResult atom_decomposition(const EventSet& g, int p);

// All duplicate-free atom subsets summing to p, in lexicographic subset
// order over ascending atom indices. pre: as above.
std::vector<std::vector<int>> all_atom_decompositions(const EventSet& g, int p);

// p <= q iff A_p is a subset of A_q, for every choice of decompositions.
// A nonzero member with no duplicate-free decomposition fails the property
// (witness kind "no-atom-decomposition"). pre: g is ngfe.
PropResult check_property_U(const EventSet& g);

// Member index -> sorted atom set; entry 0 is empty. Verified to be an
// order isomorphism onto its image before returning.
// pre: g is ngfe with property U; throws ConsistencyError if the promised
// uniqueness or order correspondence fails to hold.
struct ConcreteRepresentation {
    std::vector<std::vector<int>> atom_sets;
};
ConcreteRepresentation concrete_representation(const EventSet& g);

// For every pair p, q there is exactly one r above both with no nonzero
// member below both r - p and r - q. Witness: first pair with zero or
// several such r. pre: g has property P (so the differences are members).
PropResult check_property_T(const EventSet& g);

// Every sum over a pairwise-orthogonal set of atoms is a member. Explores
// orthogonal cliques depth-first with partial-sum pruning; a sum escaping
// [0,1] at some state is already a counterexample. Caps make the result
// Inconclusive instead of false/true.
PropResult check_orth_atom_sums(const EventSet& g, const SearchCaps& caps = {});

// Stepwise-join condition along one ordered sequence of pairwise orthogonal
// nonzero members: each partial sum must be a member and satisfy
// sum_m meet (sum_{m-1})' = b_m. pre: g is a gfe whose induced poset is an
// orthomodular lattice; the sequence is pairwise orthogonal and nonzero.
struct SequenceCheck {
    bool ok = true;
    int failed_at = -1;  // position (0-based) of the first failing prefix end
    // Cross-check: every passing partial sum must equal the join of its
    // prefix. A violation here is a library inconsistency, recorded so the
    // classifier can surface it.
    bool partial_sums_are_joins = true;
};
SequenceCheck check_stepwise_joins(const EventSet& g, const std::vector<int>& seq);

// The stepwise-join property in four readings. The canonical flag quantifies
// over every ordering of every orthogonal atom set; the others are reported
// for comparison (orderings may in principle disagree, which is worth
// surfacing rather than silently picking one).
struct StepwiseJoinReport {
    PropResult atoms_all_orders;
    PropResult atoms_some_order;
    PropResult elements_all_orders;
    PropResult elements_some_order;
    bool partial_sums_are_joins = true;
};
StepwiseJoinReport check_property_SJ(const EventSet& g, const SearchCaps& caps = {});

// q - p is a member equal to q meet p' for every p <= q. pre: the induced
// poset is an ortholattice. Witness: first failing ordered pair.
PropResult check_diff_is_meet(const EventSet& g);

enum class CheckStatus { Ok, Violated, NotApplicable };

struct ConsistencyEntry {
    std::string name;
    CheckStatus status = CheckStatus::NotApplicable;
    std::string detail;  // set when violated
};

struct ClassificationReport {
    // Flags keyed for the machine report; map keeps them sorted.
    std::map<std::string, Flag> flags;
    // Witness member indices for every False flag.
    std::map<std::string, Witness> witnesses;
    std::vector<ConsistencyEntry> consistency;
    StepwiseJoinReport stepwise;  // only meaningful when prop_SJ was computed

    Flag flag(const std::string& key) const { return flags.at(key); }
    bool has_violation() const;
    bool has_inconclusive() const;
};

struct ClassifyOptions {
    SearchCaps caps;
    // Throw ConsistencyError on the first cross-check violation instead of
    // recording it. Used by verification runs that must fail hard.
    bool fail_hard = false;
};

// Runs the full battery: membership axioms, derived structure flags,
// properties P/T/U/SJ with their preconditions, and the cross-checks tying
// them together.
ClassificationReport classify(const EventSet& g, const ClassifyOptions& opts = {});

}  // namespace nek
