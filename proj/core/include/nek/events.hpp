#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nek/poset.hpp"
#include "nek/rational.hpp"

namespace nek {

// One event as the tuple of its probabilities under a fixed, ordered list of
// states. The owning EventSet carries the state names.
struct NumericalEvent {
    std::vector<Rat> values;

    bool operator==(const NumericalEvent& other) const = default;
};

bool pointwise_leq(const NumericalEvent& a, const NumericalEvent& b);
NumericalEvent complement(const NumericalEvent& a);

// a + b <= 1 pointwise, equivalently a <= b'.
bool orthogonal(const NumericalEvent& a, const NumericalEvent& b);

// Plain pointwise sum. Requires orthogonality so the result is an event.
NumericalEvent event_sum(const NumericalEvent& a, const NumericalEvent& b);

// q - p for p <= q.
NumericalEvent event_diff(const NumericalEvent& q, const NumericalEvent& p);

// Not constant 0 or 1, and on neither side of 1/2 uniformly.
bool is_varying(const NumericalEvent& e);

// Varying, or one of the two constants.
bool is_proper(const NumericalEvent& e);

// A finite set of events over a common state list, closed under complement
// and containing both constants. Member order is canonical and fixed at
// construction: constant 0, constant 1, then the input events in the order
// given (duplicates dropped), then any complements added by autoclose.
// All deterministic scans elsewhere run in this order.
class EventSet {
  public:
    // `events` are (label, values) pairs. Labels "0" and "1" are reserved for
    // the constants. With autoclose, missing complements are appended with
    // labels derived from their source ("x'" for the complement of "x");
    // without it, a missing complement is a ValidationError.
    static EventSet build(std::vector<std::string> states,
                          const std::vector<std::pair<std::string, std::vector<Rat>>>& events,
                          bool autoclose);

    int num_states() const { return static_cast<int>(states_.size()); }
    const std::vector<std::string>& states() const { return states_; }

    int size() const { return static_cast<int>(members_.size()); }
    const NumericalEvent& member(int i) const { return members_[i]; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }

    int zero() const { return 0; }
    int one() const { return 1; }

    // Membership by value.
    std::optional<int> find(const NumericalEvent& e) const;
    std::optional<int> find_values(const std::vector<Rat>& values) const;

    int complement_of(int i) const { return induced_.prime(i); }
    bool leq(int i, int j) const { return induced_.leq(i, j); }
    bool orthogonal_members(int i, int j) const;

    // The member poset under pointwise order with complement as involution.
    // Deleted on rvalues; the reference would dangle once the set dies.
    const InvolutivePoset& induced() const& { return induced_; }
    const InvolutivePoset& induced() const&& = delete;

    bool operator==(const EventSet& other) const;

  private:
    EventSet() = default;
    std::vector<std::string> states_;
    std::vector<std::string> labels_;
    std::vector<NumericalEvent> members_;
    std::map<std::vector<Rat>, int> index_;
    InvolutivePoset induced_;
};

// Closure of orthogonal pairs under sum. Witness: first orthogonal pair
// (ascending, unordered) whose sum is missing.
PosetCheck check_axiom_sum_pairs(const EventSet& g);

// Closure of cyclically orthogonal triples under sum. Witness: first
// pairwise-orthogonal triple (ascending multisets) whose sum is missing.
PosetCheck check_axiom_sum_triples(const EventSet& g);

bool is_algebra(const EventSet& g);

// Orthoposet test on the induced poset; equivalently (and cross-asserted
// here) every member is proper.
bool is_complemented(const EventSet& g);

bool all_members_proper(const EventSet& g);

// Every member takes only the values 0 and 1.
bool is_concrete_valued(const EventSet& g);

}  // namespace nek
