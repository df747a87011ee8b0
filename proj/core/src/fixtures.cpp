#include "nek/fixtures.hpp"

#include <algorithm>
#include <bit>

namespace nek::fixtures {

namespace {

// Indicator of a subset of {1..n}, given by a bitmask over the states.
std::vector<Rat> indicator(int n, unsigned mask) {
    std::vector<Rat> v(n, Rat(0));
    for (int s = 0; s < n; ++s)
        if (mask >> s & 1) v[s] = 1;
    return v;
}

std::string subset_label(const char* prefix, unsigned mask, int n) {
    std::string label = prefix;
    for (int s = 0; s < n; ++s)
        if (mask >> s & 1) label += static_cast<char>('1' + s);
    return label;
}

// All indicators of subsets with `popcount` elements, in label order.
void add_uniform_subsets(std::vector<std::pair<std::string, std::vector<Rat>>>& events,
                         int n, int popcount, const char* prefix) {
    std::vector<std::pair<std::string, std::vector<Rat>>> batch;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != popcount) continue;
        batch.emplace_back(subset_label(prefix, mask, n), indicator(n, mask));
    }
    std::sort(batch.begin(), batch.end());
    events.insert(events.end(), batch.begin(), batch.end());
}

}  // namespace

EventSet mo1() {
    return EventSet::build({"s1", "s2"}, {{"p", {Rat(1, 3), Rat(2, 3)}}}, true);
}

EventSet even4() {
    std::vector<std::pair<std::string, std::vector<Rat>>> events;
    add_uniform_subsets(events, 4, 2, "e");
    return EventSet::build({"s1", "s2", "s3", "s4"}, events, false);
}

EventSet even6() {
    std::vector<std::pair<std::string, std::vector<Rat>>> events;
    add_uniform_subsets(events, 6, 2, "e");
    add_uniform_subsets(events, 6, 4, "f");
    return EventSet::build({"s1", "s2", "s3", "s4", "s5", "s6"}, events, false);
}

EventSet hex() {
    return EventSet::build({"s1", "s2"},
                           {
                               {"a", {Rat(1, 5), Rat(3, 5)}},
                               {"b", {Rat(3, 10), Rat(7, 10)}},
                               {"c", {Rat(7, 10), Rat(3, 10)}},
                               {"d", {Rat(4, 5), Rat(2, 5)}},
                           },
                           false);
}

EventSet single_state() {
    return EventSet::build({"s1"}, {{"p", {Rat(3, 10)}}}, true);
}

EventSet boolean_cube(int k) {
    std::vector<std::pair<std::string, std::vector<Rat>>> events;
    for (int pop = 1; pop < k; ++pop) add_uniform_subsets(events, k, pop, "u");
    std::sort(events.begin(), events.end());
    std::vector<std::string> states;
    for (int s = 1; s <= k; ++s) states.push_back("s" + std::to_string(s));
    return EventSet::build(std::move(states), events, false);
}

InvolutivePoset chain2() {
    return InvolutivePoset::validate({"0", "1"}, {{0, 1}}, {{0, 1}});
}

InvolutivePoset chain3() {
    return InvolutivePoset::validate({"0", "c", "1"}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 1}});
}

InvolutivePoset chain4() {
    return InvolutivePoset::validate({"0", "a", "b", "1"}, {{0, 1}, {1, 2}, {2, 3}},
                                     {{0, 3}, {1, 2}});
}

InvolutivePoset mo_poset(int pairs) {
    std::vector<std::string> names = {"0"};
    for (int i = 0; i < pairs; ++i) {
        names.push_back(std::string(1, static_cast<char>('a' + 2 * i)));
        names.push_back(std::string(1, static_cast<char>('b' + 2 * i)));
    }
    names.push_back("1");
    const int n = static_cast<int>(names.size());
    std::vector<std::pair<int, int>> gens, primes;
    for (int e = 1; e < n; ++e) gens.emplace_back(0, e);
    for (int e = 0; e + 1 < n; ++e) gens.emplace_back(e, n - 1);
    primes.emplace_back(0, n - 1);
    for (int i = 0; i < pairs; ++i) primes.emplace_back(1 + 2 * i, 2 + 2 * i);
    return InvolutivePoset::validate(names, gens, primes);
}

std::vector<std::pair<std::string, EventSet>> all_gse_fixtures() {
    return {
        {"mo1", mo1()},
        {"even4", even4()},
        {"even6", even6()},
        {"hex", hex()},
        {"single_state", single_state()},
        {"cube1", boolean_cube(1)},
        {"cube2", boolean_cube(2)},
        {"cube3", boolean_cube(3)},
    };
}

std::vector<std::pair<std::string, InvolutivePoset>> all_poset_fixtures() {
    return {
        {"chain2", chain2()},
        {"chain3", chain3()},
        {"chain4", chain4()},
        {"mo2", mo_poset(2)},
    };
}

}  // namespace nek::fixtures
