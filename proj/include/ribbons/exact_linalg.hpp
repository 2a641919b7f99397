#pragma once

#include "ribbons/rational.hpp"

#include <vector>

namespace ribbons {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row-major, rows of equal length

int rank(RatMat a); // works on a copy

// Basis of the right null space { x : a x = 0 }, one vector per free
// column, deterministic order.
std::vector<RatVec> kernel_basis(const RatMat& a);

// Exact feasibility of a x = b, x >= 0, decided by a phase-I simplex with
// Bland's rule (finite termination, no cycling).
bool nonneg_solution_exists(const RatMat& a, const RatVec& b);

// Clear denominators and common integer factors; flips sign so the first
// nonzero entry is positive when make_first_positive is set.
RatVec primitive_integer_vector(RatVec v, bool make_first_positive);

} // namespace ribbons
