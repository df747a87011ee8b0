#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nek/events.hpp"

namespace nek::fixtures {

// The standing example zoo. Each builder returns a fresh copy; the .gse and
// .poset files shipped with the repo are the canonical text forms of these.

// Two states, one event (1/3, 2/3) and its complement: the smallest set with
// an incomparable pair.
EventSet mo1();

// Indicators of the 2-element subsets of a 4-element sample space. An
// orthomodular lattice that is not Boolean; the unit has several atom
// decompositions, so order does not reduce to atom-set inclusion.
EventSet even4();

// Indicators of the 2- and 4-element subsets of a 6-element sample space.
// The classic algebra whose poset is not a lattice.
EventSet even6();

// Four varying events on two states forming a hexagon ortholattice; closed
// under complement but not under orthogonal sums.
EventSet hex();

// One state, one event 3/10: a chain with improper members and no proper
// state set.
EventSet single_state();

// All indicator events over k states: the Boolean cube 2^k.
EventSet boolean_cube(int k);

// Bounded posets with involution, by construction rather than from events.
InvolutivePoset chain2();
InvolutivePoset chain3();  // middle fixed by prime
InvolutivePoset chain4();  // 0 < a < b < 1 with a' = b
InvolutivePoset mo_poset(int pairs);  // 2*pairs incomparable middles, a' = b etc.

std::vector<std::pair<std::string, EventSet>> all_gse_fixtures();
std::vector<std::pair<std::string, InvolutivePoset>> all_poset_fixtures();

}  // namespace nek::fixtures
