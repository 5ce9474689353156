#pragma once

#include <optional>
#include <vector>

#include "hexagram/rational.hpp"

namespace hexagram {

/// Dense row-major rational matrix for the small exact solves in this library.
using RationalMatrix = std::vector<std::vector<Rational>>;

int matrix_rank(RationalMatrix m);
Rational determinant(RationalMatrix m);
/// Solution of A x = b for square nonsingular A; nullopt when A is singular.
std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b);

}  // namespace hexagram
