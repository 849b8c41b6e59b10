#include "torfano/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace torfano {

char coeff_letter(int k) {
    if (k < 0 || k >= 16) throw std::logic_error("coefficient index out of range");
    return static_cast<char>('a' + k);
}

int letter_index(char c) {
    if (c < 'a' || c > 'p') return -1;
    return c - 'a';
}

Int LinearForm::value_at(const IntVector& a) const {
    if (a.size() != coeffs.size()) throw std::logic_error("LinearForm: dimension mismatch");
    Int acc = 0;
    for (Eigen::Index k = 0; k < a.size(); ++k)
        acc = checked_add(acc, checked_mul(coeffs[k], a[k]));
    return acc;
}

Int QuadraticPolynomial::value_at(const IntVector& a) const {
    if (a.size() != quad.rows()) throw std::logic_error("QuadraticPolynomial: dimension mismatch");
    Int128 acc = 0;
    for (Eigen::Index i = 0; i < quad.rows(); ++i)
        for (Eigen::Index j = 0; j < quad.cols(); ++j)
            acc = checked_add(acc, checked_mul(Int128(quad(i, j)), checked_mul(Int128(a[i]), Int128(a[j]))));
    acc = checked_sub(acc, Int128(lin.value_at(a)));
    return narrow(acc);
}

namespace {

void append_term(std::string& out, Int coeff, const std::string& mono) {
    if (coeff == 0) return;
    if (out.empty()) {
        if (coeff < 0) out += '-';
    } else {
        out += coeff < 0 ? '-' : '+';
    }
    Int mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1 || mono.empty()) out += std::to_string(mag);
    out += mono;
}

}  // namespace

std::string to_string(const LinearForm& f) {
    std::string out;
    for (Eigen::Index k = 0; k < f.coeffs.size(); ++k)
        append_term(out, f.coeffs[k], std::string(1, coeff_letter(static_cast<int>(k))));
    return out.empty() ? "0" : out;
}

std::string to_string(const QuadraticPolynomial& p) {
    std::string out;
    const int n = static_cast<int>(p.quad.rows());
    // degrevlex over degree-2 monomials: x_i x_j (i <= j) ordered by j asc, then i asc.
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= j; ++i) {
            Int c = (i == j) ? p.quad(i, i) : checked_add(p.quad(i, j), p.quad(j, i));
            std::string mono(1, coeff_letter(i));
            if (i == j)
                mono += "^2";
            else
                mono += coeff_letter(j);
            append_term(out, c, mono);
        }
    for (int k = 0; k < n; ++k)
        append_term(out, checked_mul(Int(-1), p.lin.coeffs[k]), std::string(1, coeff_letter(k)));
    return out.empty() ? "0" : out;
}

namespace {

struct Term {
    Int coeff;
    int v1;  // -1 if absent
    int v2;
};

// Grammar: term (('+'|'-') term)*, term = [int]['*']? letters with optional ^2.
std::vector<Term> parse_terms(const std::string& text) {
    std::vector<Term> terms;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::runtime_error("polynomial: expected '+' or '-' at '" + text.substr(i) + "'");
        }
        first = false;
        skip_ws();
        Int mag = -1;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            mag = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                mag = checked_add(checked_mul(mag, 10), text[i++] - '0');
        }
        Term t{mag < 0 ? sign : sign * mag, -1, -1};
        while (i < text.size()) {
            if (text[i] == '*') {
                ++i;
                continue;
            }
            int v = letter_index(text[i]);
            if (v < 0) break;
            ++i;
            int pow = 1;
            if (i + 1 < text.size() && text[i] == '^' && text[i + 1] == '2') {
                pow = 2;
                i += 2;
            }
            for (int rep = 0; rep < pow; ++rep) {
                if (t.v1 < 0)
                    t.v1 = v;
                else if (t.v2 < 0)
                    t.v2 = v;
                else
                    throw std::runtime_error("polynomial: degree above 2");
            }
        }
        if (mag < 0 && t.v1 < 0) throw std::runtime_error("polynomial: empty term");
        terms.push_back(t);
        skip_ws();
    }
    return terms;
}

}  // namespace

LinearForm parse_linear_form(const std::string& text, int nvars) {
    LinearForm f = LinearForm::zero(nvars);
    for (const Term& t : parse_terms(text)) {
        if (t.v2 >= 0) throw std::runtime_error("linear form: quadratic term in '" + text + "'");
        if (t.v1 < 0) {
            if (t.coeff != 0) throw std::runtime_error("linear form: constant term in '" + text + "'");
            continue;
        }
        if (t.v1 >= nvars) throw std::runtime_error("linear form: variable out of range");
        f.coeffs[t.v1] = checked_add(f.coeffs[t.v1], t.coeff);
    }
    return f;
}

QuadraticPolynomial parse_quadratic(const std::string& text, int nvars) {
    QuadraticPolynomial p;
    p.quad = IntMatrix::Zero(nvars, nvars);
    p.lin = LinearForm::zero(nvars);
    for (const Term& t : parse_terms(text)) {
        if (t.v1 < 0) {
            if (t.coeff != 0) throw std::runtime_error("polynomial: constant term in '" + text + "'");
            continue;
        }
        if (t.v1 >= nvars || t.v2 >= nvars)
            throw std::runtime_error("polynomial: variable out of range");
        if (t.v2 < 0) {
            p.lin.coeffs[t.v1] = checked_sub(p.lin.coeffs[t.v1], t.coeff);
        } else if (t.v1 == t.v2) {
            p.quad(t.v1, t.v1) = checked_add(p.quad(t.v1, t.v1), t.coeff);
        } else {
            // split evenly when possible, otherwise keep asymmetry out of view
            // by storing the full weight on the (min,max) slot
            int i = std::min(t.v1, t.v2), j = std::max(t.v1, t.v2);
            if (t.coeff % 2 == 0) {
                p.quad(i, j) = checked_add(p.quad(i, j), t.coeff / 2);
                p.quad(j, i) = checked_add(p.quad(j, i), t.coeff / 2);
            } else {
                p.quad(i, j) = checked_add(p.quad(i, j), t.coeff);
            }
        }
    }
    return p;
}

}  // namespace torfano
