#include <random>

#include "nek/oracle.hpp"

namespace nek {

EventSet random_gse(int num_states, int pairs, int den_bound, std::uint64_t seed) {
    if (num_states < 1) throw ValidationError("random set needs at least one state");
    if (pairs < 0) throw ValidationError("negative event count");
    if (den_bound < 1) throw ValidationError("denominator bound must be positive");

    // mt19937_64 with an explicit modulo keeps the stream identical across
    // standard libraries; uniform_int_distribution would not.
    std::mt19937_64 rng(seed);
    std::vector<std::string> states;
    for (int s = 1; s <= num_states; ++s) states.push_back("s" + std::to_string(s));

    std::vector<std::pair<std::string, std::vector<Rat>>> events;
    for (int i = 1; i <= pairs; ++i) {
        std::vector<Rat> values;
        values.reserve(num_states);
        for (int s = 0; s < num_states; ++s)
            values.emplace_back(static_cast<long long>(rng() % (den_bound + 1)), den_bound);
        events.emplace_back("r" + std::to_string(i), std::move(values));
    }
    return EventSet::build(std::move(states), events, /*autoclose=*/true);
}

void Corpus::add(std::string name, EventSet g) {
    instances.push_back({std::move(name), std::move(g), std::nullopt});
}

void Corpus::add(std::string name, InvolutivePoset p) {
    instances.push_back({std::move(name), std::nullopt, std::move(p)});
}

}  // namespace nek
