#include "nek/events.hpp"

#include <algorithm>

namespace nek {

static void require_same_arity(const NumericalEvent& a, const NumericalEvent& b) {
    if (a.values.size() != b.values.size())
        throw PreconditionError("events live over different state counts");
}

bool pointwise_leq(const NumericalEvent& a, const NumericalEvent& b) {
    require_same_arity(a, b);
    for (std::size_t s = 0; s < a.values.size(); ++s)
        if (a.values[s] > b.values[s]) return false;
    return true;
}

NumericalEvent complement(const NumericalEvent& a) {
    NumericalEvent out;
    out.values.reserve(a.values.size());
    for (const Rat& v : a.values) out.values.push_back(Rat(1) - v);
    return out;
}

bool orthogonal(const NumericalEvent& a, const NumericalEvent& b) {
    require_same_arity(a, b);
    for (std::size_t s = 0; s < a.values.size(); ++s)
        if (a.values[s] + b.values[s] > 1) return false;
    return true;
}

NumericalEvent event_sum(const NumericalEvent& a, const NumericalEvent& b) {
    if (!orthogonal(a, b))
        throw PreconditionError("sum of non-orthogonal events");
    NumericalEvent out;
    out.values.reserve(a.values.size());
    for (std::size_t s = 0; s < a.values.size(); ++s)
        out.values.push_back(a.values[s] + b.values[s]);
    return out;
}

NumericalEvent event_diff(const NumericalEvent& q, const NumericalEvent& p) {
    if (!pointwise_leq(p, q))
        throw PreconditionError("difference requires p <= q");
    NumericalEvent out;
    out.values.reserve(q.values.size());
    for (std::size_t s = 0; s < q.values.size(); ++s)
        out.values.push_back(q.values[s] - p.values[s]);
    return out;
}

bool is_varying(const NumericalEvent& e) {
    bool all_le_half = true, all_ge_half = true;
    for (const Rat& v : e.values) {
        if (v > rat_half()) all_le_half = false;
        if (v < rat_half()) all_ge_half = false;
    }
    return !all_le_half && !all_ge_half;
}

bool is_proper(const NumericalEvent& e) {
    bool all0 = true, all1 = true;
    for (const Rat& v : e.values) {
        if (v != 0) all0 = false;
        if (v != 1) all1 = false;
    }
    return all0 || all1 || is_varying(e);
}

EventSet EventSet::build(std::vector<std::string> states,
                         const std::vector<std::pair<std::string, std::vector<Rat>>>& events,
                         bool autoclose) {
    if (states.empty()) throw ValidationError("a gse needs at least one state");
    const std::size_t k = states.size();

    EventSet g;
    g.states_ = std::move(states);

    auto add = [&g](std::string label, std::vector<Rat> values) -> int {
        auto it = g.index_.find(values);
        if (it != g.index_.end()) return it->second;
        // Labels must stay unique even when a complement label collides with
        // an unrelated input label.
        while (std::find(g.labels_.begin(), g.labels_.end(), label) != g.labels_.end())
            label += "'";
        int idx = static_cast<int>(g.members_.size());
        g.index_.emplace(values, idx);
        g.labels_.push_back(std::move(label));
        g.members_.push_back(NumericalEvent{std::move(values)});
        return idx;
    };

    add("0", std::vector<Rat>(k, Rat(0)));
    add("1", std::vector<Rat>(k, Rat(1)));

    std::vector<std::string> input_labels;
    for (const auto& [label, values] : events) {
        if (label == "0" || label == "1")
            throw ValidationError("label '" + label + "' is reserved for the constants");
        if (std::find(input_labels.begin(), input_labels.end(), label) != input_labels.end())
            throw ValidationError("duplicate event label '" + label + "'");
        input_labels.push_back(label);
        if (values.size() != k)
            throw ValidationError("event '" + label + "' has " + std::to_string(values.size()) +
                                  " values for " + std::to_string(k) + " states");
        for (const Rat& v : values)
            if (v < 0 || v > 1)
                throw ValidationError("event '" + label + "' has a value outside [0, 1]");
        add(label, values);
    }

    // Complement closure. The complement map is involutive, so appending the
    // missing partners of the original members is already a fixed point.
    for (int i = 0; i < static_cast<int>(g.members_.size()); ++i) {
        std::vector<Rat> comp = complement(g.members_[i]).values;
        if (g.index_.count(comp)) continue;
        if (!autoclose)
            throw ValidationError("complement of '" + g.labels_[i] +
                                  "' is missing (not closed; consider autoclose)");
        add(g.labels_[i] + "'", std::move(comp));
    }

    const int n = static_cast<int>(g.members_.size());
    std::vector<std::pair<int, int>> gens;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && pointwise_leq(g.members_[i], g.members_[j])) gens.emplace_back(i, j);
    std::vector<std::pair<int, int>> primes;
    for (int i = 0; i < n; ++i) {
        int c = g.index_.at(complement(g.members_[i]).values);
        if (i <= c) primes.emplace_back(i, c);
    }
    g.induced_ = InvolutivePoset::validate(g.labels_, gens, primes);
    return g;
}

std::optional<int> EventSet::find(const NumericalEvent& e) const { return find_values(e.values); }

std::optional<int> EventSet::find_values(const std::vector<Rat>& values) const {
    auto it = index_.find(values);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool EventSet::orthogonal_members(int i, int j) const {
    return orthogonal(members_[i], members_[j]);
}

bool EventSet::operator==(const EventSet& other) const {
    return states_ == other.states_ && labels_ == other.labels_ && members_ == other.members_;
}

PosetCheck check_axiom_sum_pairs(const EventSet& g) {
    const int n = g.size();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (!g.orthogonal_members(i, j)) continue;
            if (!g.find(event_sum(g.member(i), g.member(j))))
                return {false, Witness{"sum-missing", {i, j}}};
        }
    return {};
}

PosetCheck check_axiom_sum_triples(const EventSet& g) {
    const int n = g.size();
    const int k = g.num_states();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (!g.orthogonal_members(i, j)) continue;
            for (int l = j; l < n; ++l) {
                if (!g.orthogonal_members(j, l) || !g.orthogonal_members(i, l)) continue;
                // The raw triple sum may exceed 1 at some state; then it is
                // not an event at all and in particular not a member.
                std::vector<Rat> sum(k);
                for (int s = 0; s < k; ++s)
                    sum[s] = g.member(i).values[s] + g.member(j).values[s] + g.member(l).values[s];
                if (!g.find_values(sum))
                    return {false, Witness{"triple-sum-missing", {i, j, l}}};
            }
        }
    return {};
}

bool is_algebra(const EventSet& g) {
    return check_axiom_sum_pairs(g).ok && check_axiom_sum_triples(g).ok;
}

bool all_members_proper(const EventSet& g) {
    for (int i = 0; i < g.size(); ++i)
        if (!is_proper(g.member(i))) return false;
    return true;
}

bool is_complemented(const EventSet& g) {
    bool ortho = is_orthoposet(g.induced()).ok;
    // Equivalent characterization: complemented iff every member is proper.
    // A split between the two routes means the library is broken.
    if (ortho != all_members_proper(g))
        throw ConsistencyError("complemented/proper equivalence failed");
    return ortho;
}

bool is_concrete_valued(const EventSet& g) {
    for (int i = 0; i < g.size(); ++i)
        for (const Rat& v : g.member(i).values)
            if (v != 0 && v != 1) return false;
    return true;
}

}  // namespace nek
