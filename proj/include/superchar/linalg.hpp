#pragma once

#include <vector>

#include "superchar/bigint.hpp"

namespace superchar {

using RatMatrix = std::vector<std::vector<Rational>>;

int rank(RatMatrix a);
// Pivot rows and columns of a maximal invertible square submatrix.
void independent_rows_cols(const RatMatrix& a, std::vector<int>& rows, std::vector<int>& cols);
// Solves a x = b for square invertible a.
std::vector<Rational> solve(RatMatrix a, std::vector<Rational> b);

}  // namespace superchar
