#include <vector>

#include "doctest.h"
#include "nek/fixtures.hpp"
#include "nek/io.hpp"
#include "nek/oracle.hpp"
#include "nek/states.hpp"

using namespace nek;

namespace {

StateVector sv(std::vector<Rat> v) { return StateVector{std::move(v)}; }

// Diamond with both middles fixed by prime: every state pins them to 1/2,
// so the incomparable pair can never be separated.
InvolutivePoset rigid_diamond() {
    return InvolutivePoset::validate({"0", "a", "b", "1"},
                                     {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                                     {{0, 3}, {1, 1}, {2, 2}});
}

InvolutivePoset benzene() {
    return InvolutivePoset::validate({"0", "a", "b", "a'", "b'", "1"},
                                     {{0, 1}, {1, 2}, {2, 5}, {0, 4}, {4, 3}, {3, 5}},
                                     {{0, 5}, {1, 3}, {2, 4}});
}

}  // namespace

TEST_CASE("state conditions") {
    InvolutivePoset c2 = fixtures::chain2();
    CHECK(is_state(c2, sv({0, 1})));
    CHECK_FALSE(is_state(c2, sv({Rat(1, 2), 1})));  // bottom must sit at 0

    InvolutivePoset c3 = fixtures::chain3();
    CHECK(is_state(c3, sv({0, Rat(1, 2), 1})));
    CHECK_FALSE(is_state(c3, sv({0, Rat(1, 3), 1})));  // m(c') = 1 - m(c) fails

    InvolutivePoset mo1 = fixtures::mo_poset(1);
    CHECK(is_state(mo1, sv({0, Rat(1, 4), Rat(3, 4), 1})));
    CHECK_FALSE(is_state(mo1, sv({0, Rat(1, 4), Rat(1, 4), 1})));

    // Monotonicity violation on the 4-chain.
    CHECK_FALSE(is_state(fixtures::chain4(), sv({0, Rat(1, 2), Rat(1, 4), 1})));
}

TEST_CASE("fullness needs separating states in both directions") {
    InvolutivePoset mo1 = fixtures::mo_poset(1);
    StateVector low = sv({0, Rat(1, 4), Rat(3, 4), 1});
    StateVector high = sv({0, Rat(3, 4), Rat(1, 4), 1});

    FullCheck one = is_full(mo1, {low});
    REQUIRE_FALSE(one.ok);
    CHECK(one.witness == std::pair<int, int>{1, 2});  // a vs b never separated

    CHECK(is_full(mo1, {low, high}).ok);
    CHECK(is_full(fixtures::chain2(), {sv({0, 1})}).ok);

    CHECK_THROWS_AS(is_full(mo1, {sv({0, Rat(1, 4), Rat(1, 2), 1})}), PreconditionError);
}

TEST_CASE("properness quantifies over witnessed values") {
    InvolutivePoset c3 = fixtures::chain3();
    CHECK(is_proper_set(c3, {}).ok);  // vacuous

    ProperCheck stuck = is_proper_set(c3, {sv({0, Rat(1, 2), 1})});
    REQUIRE_FALSE(stuck.ok);
    CHECK(stuck.witness == 1);  // c shows 1/2 but never dips below

    InvolutivePoset mo1 = fixtures::mo_poset(1);
    CHECK(is_proper_set(mo1, {sv({0, Rat(1, 4), Rat(3, 4), 1}),
                              sv({0, Rat(3, 4), Rat(1, 4), 1})})
              .ok);
    // An all-boolean state leaves no witnessed middle values behind.
    CHECK(is_proper_set(fixtures::chain2(), {sv({0, 1})}).ok);
}

TEST_CASE("synthesis outcomes across the fixture posets") {
    SynthesisResult mo2 = synthesize_full_proper(fixtures::mo_poset(2));
    REQUIRE(mo2.outcome == SynthesisResult::Outcome::Success);
    CHECK(mo2.states.full);
    CHECK(mo2.states.proper);
    CHECK(mo2.states.members.size() == 4);
    for (const auto& sep : mo2.separations) CHECK(sep.optimum > 0);

    SynthesisResult c3 = synthesize_full_proper(fixtures::chain3());
    REQUIRE(c3.outcome == SynthesisResult::Outcome::NoProperSet);
    CHECK(c3.proper_witness == 1);

    // 0 < a < b < 1 with a' = b pins m(a) below 1/2.
    SynthesisResult c4 = synthesize_full_proper(fixtures::chain4());
    REQUIRE(c4.outcome == SynthesisResult::Outcome::NoProperSet);
    CHECK(c4.proper_witness == 1);
    REQUIRE_FALSE(c4.properness.empty());
    CHECK(c4.properness.front().min == 0);
    CHECK(c4.properness.front().max == Rat(1, 2));

    // Two self-primed incomparable middles cannot be separated at all.
    SynthesisResult rigid = synthesize_full_proper(rigid_diamond());
    REQUIRE(rigid.outcome == SynthesisResult::Outcome::NoFullSet);
    CHECK(rigid.full_witness == std::pair<int, int>{1, 2});

    SynthesisResult triv = synthesize_full_proper(fixtures::chain2());
    REQUIRE(triv.outcome == SynthesisResult::Outcome::Success);
    CHECK(triv.states.members == std::vector<StateVector>{sv({0, 1})});

    // Benzene is not orthomodular yet still has a full proper state set.
    CHECK(synthesize_full_proper(benzene()).outcome ==
          SynthesisResult::Outcome::Success);
}

TEST_CASE("embedding realizes the poset over the chosen states") {
    InvolutivePoset mo1 = fixtures::mo_poset(1);
    std::vector<StateVector> M{sv({0, Rat(1, 4), Rat(3, 4), 1}),
                               sv({0, Rat(3, 4), Rat(1, 4), 1})};
    EventSet g = embed(mo1, M);
    REQUIRE(g.size() == 4);
    CHECK(g.num_states() == 2);
    CHECK(g.label(2) == "a");
    CHECK(g.member(2).values == std::vector<Rat>{Rat(1, 4), Rat(3, 4)});
    CHECK(g.member(3).values == std::vector<Rat>{Rat(3, 4), Rat(1, 4)});
    CHECK(isomorphic(g.induced(), mo1));

    // No proper set exists for the 3-chain, so any set handed in fails.
    CHECK_THROWS_AS(embed(fixtures::chain3(), {sv({0, Rat(1, 2), 1})}),
                    PreconditionError);
}

TEST_CASE("canonical states of an event set") {
    StateSet mo1 = states_of_gse(fixtures::mo1());
    CHECK(mo1.members.size() == 2);
    CHECK(mo1.full);
    CHECK(mo1.proper);
    CHECK(mo1.members[0] == sv({0, 1, Rat(1, 3), Rat(2, 3)}));

    StateSet ss = states_of_gse(fixtures::single_state());
    CHECK(ss.members.size() == 1);
    CHECK(ss.full);
    CHECK_FALSE(ss.proper);

    CHECK(states_of_gse(fixtures::even4()).members.size() == 4);

    // Duplicate state columns collapse.
    EventSet flat = EventSet::build({"s1", "s2"}, {{"p", {Rat(1, 2), Rat(1, 2)}}}, true);
    CHECK(states_of_gse(flat).members.size() == 1);
}

TEST_CASE("event sets of proper members round trip through their states") {
    for (const auto& [name, g] : fixtures::all_gse_fixtures()) {
        if (!all_members_proper(g)) continue;
        StateSet states = states_of_gse(g);
        EventSet back = embed(g.induced(), states.members);
        CHECK_MESSAGE(isomorphic(back.induced(), g.induced()), name);
    }
}

TEST_CASE("synthesis agrees with exhaustive vertex search on small posets") {
    for (const auto& [name, p] : fixtures::all_poset_fixtures()) {
        bool synth = synthesize_full_proper(p).outcome == SynthesisResult::Outcome::Success;
        CHECK_MESSAGE(vertex_search_full_proper(p).full_proper_exists == synth, name);
    }
    CHECK(vertex_search_full_proper(rigid_diamond()).full_proper_exists == false);
    CHECK(vertex_search_full_proper(benzene()).full_proper_exists == true);
}
