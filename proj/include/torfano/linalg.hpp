#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "torfano/ints.hpp"

namespace torfano {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Vec4 = Eigen::Matrix<Int, 4, 1>;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
Int128 determinant(const IntMatrix& m);

/// Rank over the rationals, by fraction-free elimination.
int rank(const IntMatrix& m);

/// Solves m * x = rhs exactly for each rhs column. Returns nothing if the
/// system is inconsistent, underdetermined on the touched coordinates, or has
/// a non-integral solution. m must have full column rank.
std::optional<IntMatrix> solve_integer(const IntMatrix& m, const IntMatrix& rhs);

/// True when m (full column rank k) maps Z^k onto a saturated sublattice,
/// i.e. its Smith normal form has unit diagonal. Such systems solve
/// integrally for every rhs in the column span.
bool spans_saturated_lattice(const IntMatrix& m);

/// One integer solution of rows * x = b (underdetermined allowed), found by
/// column-style Hermite reduction. Deterministic in the input. Returns
/// nothing when no integer solution exists.
std::optional<IntVector> solve_underdetermined(const IntMatrix& rows, const IntVector& b);

/// Basis of the integer kernel of rows (columns of the returned matrix).
IntMatrix integer_kernel(const IntMatrix& rows);

/// Coefficients of det(x*I - m), highest degree first (monic), computed
/// exactly via the Faddeev-LeVerrier recurrence in 128-bit arithmetic.
std::vector<Int128> characteristic_polynomial(const IntMatrix& m);

/// Descartes count of positive roots for a polynomial with all roots real:
/// sign variations of the nonzero coefficients.
int sign_variations(const std::vector<Int128>& coeffs);

/// Number of trailing zero coefficients = multiplicity of the zero root.
int zero_root_multiplicity(const std::vector<Int128>& coeffs);

inline bool is_primitive(const Vec4& v) {
    Int g = 0;
    for (int i = 0; i < 4; ++i) g = gcd_int(g, v[i]);
    return g == 1;
}

}  // namespace torfano
