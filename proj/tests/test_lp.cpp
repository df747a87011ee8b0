#include <vector>

#include "doctest.h"
#include "nek/fixtures.hpp"
#include "nek/lp.hpp"
#include "nek/states.hpp"

using namespace nek;

namespace {

using Matrix = std::vector<std::vector<Rat>>;
using Vec = std::vector<Rat>;

}  // namespace

TEST_CASE("simplex on small exact programs") {
    // max 3x + 2y, x + y <= 4, x + 3y <= 6.
    LpSolution s = solve_lp(Matrix{{1, 1}, {1, 3}}, Vec{4, 6}, Vec{3, 2});
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == 12);
    CHECK(s.x == Vec{4, 0});

    // Fractional optimum stays exact: max x, 3x <= 1.
    s = solve_lp(Matrix{{3}}, Vec{1}, Vec{1});
    CHECK(s.objective == Rat(1, 3));

    // Negative right-hand side forces phase one: max -x, x >= 2 i.e. -x <= -2.
    s = solve_lp(Matrix{{-1}}, Vec{-2}, Vec{-1});
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == -2);
    CHECK(s.x == Vec{2});
}

TEST_CASE("infeasible and unbounded outcomes") {
    CHECK(solve_lp(Matrix{{1}, {-1}}, Vec{1, -2}, Vec{1}).status == LpStatus::Infeasible);
    CHECK(solve_lp(Matrix{}, Vec{}, Vec{1}).status == LpStatus::Unbounded);
    CHECK(solve_lp(Matrix{{-1}}, Vec{0}, Vec{1}).status == LpStatus::Unbounded);
    // No positive direction: all-zero objective on empty constraints is fine.
    CHECK(solve_lp(Matrix{}, Vec{}, Vec{0, 0}).status == LpStatus::Optimal);
}

TEST_CASE("Bland's rule survives the classic cycling program") {
    // Beale's example; naive largest-coefficient pivoting cycles forever.
    Matrix A{{Rat(1, 4), -60, Rat(-1, 25), 9},
             {Rat(1, 2), -90, Rat(-1, 50), 3},
             {0, 0, 1, 0}};
    Vec b{0, 0, 1};
    Vec c{Rat(3, 4), -150, Rat(1, 50), -6};
    LpSolution s = solve_lp(A, b, c);
    REQUIRE(s.status == LpStatus::Optimal);
    CHECK(s.objective == Rat(1, 20));
    CHECK(s.x == Vec{Rat(1, 25), 0, 1, 0});
}

TEST_CASE("state polytope dimensions follow the prime orbits") {
    StateProgram mo2 = build_state_program(fixtures::mo_poset(2));
    CHECK(mo2.num_vars == 2);  // one variable per complement pair

    StateProgram c3 = build_state_program(fixtures::chain3());
    CHECK(c3.num_vars == 0);  // middle pinned at 1/2 by m(c') = 1 - m(c)
    CHECK(c3.elem[1].constant == Rat(1, 2));

    StateProgram c4 = build_state_program(fixtures::chain4());
    CHECK(c4.num_vars == 1);  // b carries 1 - m(a)
}

TEST_CASE("state optimization matches hand results") {
    InvolutivePoset mo2 = fixtures::mo_poset(2);
    StateProgram prog = build_state_program(mo2);

    // max m(a) over MO2: a box vertex.
    StateOptimum best = optimize_state(prog, {0, 1, 0, 0, 0, 0});
    CHECK(best.optimum == 1);
    CHECK(best.witness.values[1] == 1);
    CHECK(best.witness.values[2] == 0);  // partner rides along
    CHECK(is_state(mo2, best.witness));

    // max m(a) - m(b) on the 4-chain: monotonicity binds, optimum 0.
    StateOptimum diff = optimize_state(build_state_program(fixtures::chain4()),
                                       {0, 1, -1, 0});
    CHECK(diff.optimum == 0);

    // The 3-chain's middle cannot move off 1/2 in either direction.
    StateProgram c3 = build_state_program(fixtures::chain3());
    CHECK(optimize_state(c3, {0, 1, 0}).optimum == Rat(1, 2));
    CHECK(optimize_state(c3, {0, -1, 0}).optimum == Rat(-1, 2));
    CHECK(optimize_state(c3, {0, 1, 0}).witness.values ==
          std::vector<Rat>{0, Rat(1, 2), 1});
}

TEST_CASE("optimal witnesses satisfy every row with zero slack") {
    for (const auto& [name, poset] : fixtures::all_poset_fixtures()) {
        StateProgram prog = build_state_program(poset);
        std::vector<Rat> coeffs(poset.size(), 0);
        for (int e = 0; e < poset.size(); ++e) {
            coeffs.assign(poset.size(), 0);
            coeffs[e] = 1;
            StateOptimum r = optimize_state(prog, coeffs);
            CHECK_MESSAGE(is_state(poset, r.witness), name);
            // Re-walk the raw rows in orbit coordinates.
            std::vector<Rat> x(prog.num_vars, 0);
            for (int el = 0; el < poset.size(); ++el)
                if (prog.elem[el].sign == 1) x[prog.elem[el].var] = r.witness.values[el];
            for (std::size_t row = 0; row < prog.rows.size(); ++row) {
                Rat lhs = 0;
                for (int v = 0; v < prog.num_vars; ++v) lhs += prog.rows[row][v] * x[v];
                CHECK(lhs <= prog.rhs[row]);
            }
        }
    }
}
