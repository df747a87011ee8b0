#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nek/events.hpp"
#include "nek/lp.hpp"
#include "nek/structure.hpp"

namespace nek {

// Canonical string form of a bounded poset with involution: minimum over
// all element orderings (restricted by an iterated-refinement coloring) of
// the relation matrix plus the prime map. Equal strings iff isomorphic via
// an order isomorphism commuting with prime.
std::string canonical_encoding(const InvolutivePoset& p);

bool isomorphic(const InvolutivePoset& a, const InvolutivePoset& b);

// All bounded posets with antitone involution on n elements, one
// representative per isomorphism class, sorted by canonical encoding.
// Elements come out named 0, 1, a, b, ... with the bounds first.
// n above the cap is refused (the search is exponential).
std::vector<InvolutivePoset> enumerate_involutive_posets(int n, int n_cap = 10);

// Independent reference enumeration for small n: filter all relation
// matrices, then all involutions, and deduplicate by pairwise brute-force
// isomorphism search. Exists to cross-check the incremental enumerator.
std::vector<InvolutivePoset> enumerate_by_filter(int n);

// Decides existence of a full and proper state set by enumerating every
// vertex of the state polytope exactly (Gaussian elimination over all
// active-constraint subsets). Independent of the simplex route.
struct VertexSearch {
    bool full_proper_exists = false;
    std::vector<StateVector> vertices;
};
VertexSearch vertex_search_full_proper(const InvolutivePoset& p);

// Deterministic random event set: `pairs` events drawn uniformly with
// denominators dividing `den_bound`, closed under complement. Same seed,
// same set, on any platform (mt19937_64 plus explicit modulo reduction).
EventSet random_gse(int num_states, int pairs, int den_bound, std::uint64_t seed);

struct CorpusInstance {
    std::string name;
    // Exactly one of the two is set.
    std::optional<EventSet> gse;
    std::optional<InvolutivePoset> poset;
};

struct Corpus {
    std::vector<CorpusInstance> instances;

    void add(std::string name, EventSet g);
    void add(std::string name, InvolutivePoset p);
};

struct TheoremStat {
    std::string name;
    int checked = 0;
    int violations = 0;
};

struct TheoremViolation {
    std::string theorem;
    std::string instance;
    std::string detail;
};

struct VerificationReport {
    std::vector<TheoremStat> stats;  // fixed order, one entry per theorem
    std::vector<TheoremViolation> violations;
    bool inconclusive = false;  // some search hit its cap somewhere

    bool ok() const { return violations.empty(); }
};

// Replays every cross-check over the corpus: the classification
// consistency battery on event sets, plus state-set round trips, LP/vertex
// agreement on small posets, and structural invariants of the induced
// posets.
VerificationReport verify_theorems(const Corpus& corpus, const SearchCaps& caps = {});

}  // namespace nek
