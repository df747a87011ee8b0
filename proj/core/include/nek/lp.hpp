#pragma once

#include <vector>

#include "nek/poset.hpp"
#include "nek/rational.hpp"

namespace nek {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    Rat objective;
    std::vector<Rat> x;
};

// Maximize c.x subject to A x <= b, x >= 0, everything exact. Two-phase
// simplex with Bland's smallest-index rule, so it terminates and is fully
// deterministic. Sizes here are tiny; no effort is spent on sparsity.
LpSolution solve_lp(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                    const std::vector<Rat>& c);

// Affine description of one element's value under every state of the
// polytope: value = constant + sign * x[var]. Elements pinned by the
// structure (bounds, self-primed elements) have sign 0.
struct OrbitAffine {
    Rat constant;
    int sign = 0;
    int var = -1;
};

// The polytope of states on a poset, in orbit coordinates: one variable per
// unpinned prime pair, the pair partner expressed as 1 - x. Constraints are
// the covering-pair monotonicity rows plus x <= 1 box rows (x >= 0 is native
// to the solver). Owns its poset copy, so it outlives the argument it was
// built from.
struct StateProgram {
    InvolutivePoset poset;
    std::vector<OrbitAffine> elem;
    int num_vars = 0;
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs;
};

StateProgram build_state_program(const InvolutivePoset& p);

// A candidate state as the vector of its values on all elements.
struct StateVector {
    std::vector<Rat> values;

    bool operator==(const StateVector& other) const = default;
    bool operator<(const StateVector& other) const { return values < other.values; }
};

struct StateOptimum {
    Rat optimum;
    StateVector witness;
};

// Maximize sum_e coeffs[e] * m(e) over the state polytope. The witness is
// the optimal vertex expanded back to element values and re-verified to be
// a state before returning.
StateOptimum optimize_state(const StateProgram& prog, const std::vector<Rat>& coeffs);

}  // namespace nek
