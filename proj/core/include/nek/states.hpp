#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nek/events.hpp"
#include "nek/lp.hpp"

namespace nek {

// State conditions on a poset with involution: values in [0,1], bottom at 0,
// monotone, and m(p') = 1 - m(p).
bool is_state(const InvolutivePoset& p, const StateVector& m);

struct FullCheck {
    bool ok = true;
    // First ordered pair (p, q) with p not below q that no member separates.
    std::optional<std::pair<int, int>> witness;
};
FullCheck is_full(const InvolutivePoset& p, const std::vector<StateVector>& set);

struct ProperCheck {
    bool ok = true;
    // First element that takes a value outside {0,1} under some member but
    // is never pushed to both sides of 1/2.
    std::optional<int> witness;
};
ProperCheck is_proper_set(const InvolutivePoset& p, const std::vector<StateVector>& set);

struct StateSet {
    std::vector<StateVector> members;
    bool full = false;
    bool proper = false;
};

// Constructive search for a full and proper state set, driven by the exact
// LP: one separation program per incomparable ordered pair, then two
// programs per non-bound element pushing its value below and above 1/2.
// Either return is accompanied by the solved optima as certificates.
struct SynthesisResult {
    enum class Outcome { Success, NoFullSet, NoProperSet };
    Outcome outcome = Outcome::Success;
    StateSet states;  // filled on success

    // A pair p,q with p not below q whose best separation max m(p) - m(q)
    // is not positive; fullness is then impossible.
    std::optional<std::pair<int, int>> full_witness;
    // An element stuck on one side of 1/2 over the whole polytope.
    std::optional<int> proper_witness;

    struct Separation {
        int p, q;
        Rat optimum;
    };
    std::vector<Separation> separations;
    struct Properness {
        int elem;
        Rat min, max;
    };
    std::vector<Properness> properness;
};

SynthesisResult synthesize_full_proper(const InvolutivePoset& p);

// Realizes the poset as a set of events over one state per set member:
// element p becomes the tuple (m(p) : m in set). Requires a full and proper
// set of states; the result is verified to be an order-and-prime isomorphic
// copy with every member proper.
EventSet embed(const InvolutivePoset& p, const std::vector<StateVector>& set);

// The canonical states of an event set: one state per underlying state
// symbol, s |-> (p(s))_p, duplicates dropped (first occurrence kept). Always
// full; proper exactly when every member of g is proper (both directions
// are asserted).
StateSet states_of_gse(const EventSet& g);

}  // namespace nek
