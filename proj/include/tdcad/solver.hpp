#pragma once

#include <vector>

#include "tdcad/chains.hpp"

namespace tdcad {

// Decompose the set {e = 0 for all e in eqs} ∩ {n ≠ 0 for all n in ineqs}
// into squarefree regular systems with pairwise disjoint zero sets whose
// union is exactly that set. Splitting is lazy: a system is subdivided only
// when an inequation or separant is a zerodivisor against the chain being
// built, so inputs like a single polynomial come back unfragmented.
std::vector<RegularSystem> solve_system(const VarOrderPtr& order,
                                        std::vector<Polynomial> eqs,
                                        std::vector<Polynomial> ineqs);

// Partition Z(cell) ∩ {n ≠ 0} into cells. Cheap when n is regular against
// the cell's chain; otherwise falls back to a full re-solve.
std::vector<RegularSystem> restrict_nonzero(const RegularSystem& cell, const Polynomial& n);

// Partition Z(cell) ∩ V(f) into cells.
std::vector<RegularSystem> restrict_zero(const RegularSystem& cell, const Polynomial& f);

// Z(a) \ Z(b) as disjoint cells.
std::vector<RegularSystem> cell_difference(const RegularSystem& a, const RegularSystem& b);

// Deterministic order on systems, used to keep outputs stable.
bool system_less(const RegularSystem& a, const RegularSystem& b);
void sort_systems(std::vector<RegularSystem>& v);

}  // namespace tdcad
