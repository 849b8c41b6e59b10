#pragma once

#include <string>

#include "torfano/linalg.hpp"

namespace torfano {

/// Coefficient letters a..p, indexed by basis position.
char coeff_letter(int k);
int letter_index(char c);

/// Linear form over the A^2-basis coefficients: value at a = sum coeffs_k * a_k.
struct LinearForm {
    IntVector coeffs;
    LinearForm() = default;
    explicit LinearForm(IntVector c) : coeffs(std::move(c)) {}
    static LinearForm zero(int n) { return LinearForm(IntVector::Zero(n)); }
    Int value_at(const IntVector& a) const;
    bool is_zero() const { return coeffs.isZero(); }
    bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }
};

/// Quadratic polynomial a^T quad a - lin(a); quad is the basis gram matrix.
struct QuadraticPolynomial {
    IntMatrix quad;
    LinearForm lin;
    Int value_at(const IntVector& a) const;
};

/// Fixed printing order: degrevlex on the coefficient letters, quadratic
/// monomials before linear ones, e.g. "4a^2+4ab+b^2+2ac-19a-11b-3c".
std::string to_string(const LinearForm& f);
std::string to_string(const QuadraticPolynomial& p);

/// Parses the same syntax back. nvars fixes the coefficient count.
LinearForm parse_linear_form(const std::string& text, int nvars);
QuadraticPolynomial parse_quadratic(const std::string& text, int nvars);

}  // namespace torfano
