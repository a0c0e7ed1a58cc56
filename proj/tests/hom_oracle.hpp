#pragma once

// Brute-force Hom dimensions for Kronecker preinjectives, written without any
// of the library's linear algebra: its own rational type, its own equation
// assembly, its own elimination.

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Rational>>;

struct Kronecker {
  std::size_t d1 = 0, d2 = 0;  // source and target vertex dimensions
  Matrix alpha, beta;           // d2 x d1
};

/// String module with n tops x_1..x_n and valleys y_1..y_{n-1}: beta x_j = y_j
/// and alpha x_{j+1} = y_j.
Kronecker preinjective(std::size_t n);

/// Number of free columns after plain Gaussian elimination.
std::size_t nullity(Matrix rows, std::size_t cols);

/// dim Hom(M, N) from the equations f2 M_a - N_a f1 = 0.
std::size_t hom_dimension(const Kronecker& m, const Kronecker& n);

}  // namespace oracle
