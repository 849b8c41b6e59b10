#include "torfano/chow.hpp"

#include <algorithm>

namespace torfano {

namespace {

std::vector<int> support_of(const Multiset4& m) {
    std::vector<int> s;
    for (int i : m)
        if (s.empty() || s.back() != i) s.push_back(i);
    return s;
}

}  // namespace

IntersectionTable::IntersectionTable(FanPresentation pres, FaceComplex complex,
                                     std::vector<Vec4> coords)
    : pres_(std::move(pres)), complex_(std::move(complex)), coords_(std::move(coords)) {
    const int r = pres_.ray_count;
    std::map<Multiset4, Int> memo;
    for (int i = 1; i <= r; ++i)
        for (int j = i; j <= r; ++j)
            for (int k = j; k <= r; ++k)
                for (int l = k; l <= r; ++l) {
                    Multiset4 m{i, j, k, l};
                    memo[m] = compute(m, memo, nullptr);
                }
    entries_ = std::move(memo);
}

Int IntersectionTable::quartic(int i, int j, int k, int l) const {
    Multiset4 m{i, j, k, l};
    std::sort(m.begin(), m.end());
    return quartic(m);
}

Int IntersectionTable::quartic(Multiset4 m) const {
    std::sort(m.begin(), m.end());
    auto it = entries_.find(m);
    if (it == entries_.end()) throw std::logic_error("quartic: index out of range");
    return it->second;
}

Vec4 IntersectionTable::reduction_dual(const std::vector<int>& support, int reduce_index) const {
    IntMatrix rows(static_cast<Eigen::Index>(support.size()), 4);
    IntVector b(static_cast<Eigen::Index>(support.size()));
    for (size_t t = 0; t < support.size(); ++t) {
        rows.row(static_cast<Eigen::Index>(t)) = coords_[static_cast<size_t>(support[t] - 1)].transpose();
        b[static_cast<Eigen::Index>(t)] = support[t] == reduce_index ? 1 : 0;
    }
    auto m = solve_underdetermined(rows, b);
    if (!m) throw std::logic_error("reduction_dual: no dual vector; fan not smooth on this face");
    return Vec4((*m)[0], (*m)[1], (*m)[2], (*m)[3]);
}

Int IntersectionTable::compute(Multiset4 m, std::map<Multiset4, Int>& memo,
                               const DualChooser* chooser) const {
    std::sort(m.begin(), m.end());
    if (chooser == nullptr) {
        auto it = memo.find(m);
        if (it != memo.end()) return it->second;
    }
    std::vector<int> support = support_of(m);
    // Stanley-Reisner vanishing: a support containing a primitive collection
    // multiplies to zero.
    for (const auto& rel : pres_.relations) {
        if (std::includes(support.begin(), support.end(), rel.lhs.begin(), rel.lhs.end())) return 0;
    }
    if (support.size() == 4) {
        // A 4-element face of a complete simplicial 4-fold is a maximal cone.
        return 1;
    }
    // Some index repeats; replace one copy of D_i by the linear relation for a
    // dual vector m with <m,x_i> = 1 vanishing on the rest of the support.
    int reduce_index = 0;
    for (size_t t = 0; t + 1 < m.size(); ++t)
        if (m[t] == m[t + 1]) {
            reduce_index = m[t];
            break;
        }
    Vec4 dual = chooser ? (*chooser)(*this, support, reduce_index)
                        : reduction_dual(support, reduce_index);
    // Remove one copy of reduce_index.
    Multiset4 rest = m;
    for (size_t t = 0; t < rest.size(); ++t)
        if (rest[t] == reduce_index) {
            rest[t] = 0;
            break;
        }
    Int acc = 0;
    for (int j = 1; j <= pres_.ray_count; ++j) {
        if (j == reduce_index) continue;
        Int coeff = dual.dot(coords_[static_cast<size_t>(j - 1)]);
        if (coeff == 0) continue;
        Multiset4 next = rest;
        for (size_t t = 0; t < next.size(); ++t)
            if (next[t] == 0) {
                next[t] = j;
                break;
            }
        acc = checked_sub(acc, checked_mul(coeff, compute(next, memo, chooser)));
    }
    return acc;
}

Int IntersectionTable::quartic_with_chooser(Multiset4 m, const DualChooser& chooser) const {
    std::map<Multiset4, Int> scratch;
    return compute(m, scratch, &chooser);
}

int NumericalPartition::class_of(int ray) const {
    for (size_t c = 0; c < classes.size(); ++c)
        for (int i : classes[c])
            if (i == ray) return static_cast<int>(c);
    throw std::logic_error("class_of: unknown ray");
}

NumericalPartition numerical_partition(const IntersectionTable& table) {
    const int r = table.ray_count();
    auto same_row = [&](int i, int j) {
        for (int k = 1; k <= r; ++k)
            for (int l = k; l <= r; ++l)
                for (int n = l; n <= r; ++n)
                    if (table.quartic(i, k, l, n) != table.quartic(j, k, l, n)) return false;
        return true;
    };
    NumericalPartition part;
    std::vector<bool> used(static_cast<size_t>(r) + 1, false);
    for (int i = 1; i <= r; ++i) {
        if (used[static_cast<size_t>(i)]) continue;
        std::vector<int> cls{i};
        used[static_cast<size_t>(i)] = true;
        for (int j = i + 1; j <= r; ++j)
            if (!used[static_cast<size_t>(j)] && same_row(i, j)) {
                cls.push_back(j);
                used[static_cast<size_t>(j)] = true;
            }
        part.classes.push_back(std::move(cls));
    }
    return part;
}

BasisA2 check_basis(const IntersectionTable& table, const std::vector<std::pair<int, int>>& monomials,
                    int betti4) {
    if (static_cast<int>(monomials.size()) != betti4)
        throw BasisError("basis length " + std::to_string(monomials.size()) + " does not match b4 = " +
                         std::to_string(betti4));
    BasisA2 b;
    b.monomials = monomials;
    const int s = static_cast<int>(monomials.size());
    b.gram = IntMatrix(s, s);
    for (int k = 0; k < s; ++k)
        for (int l = 0; l < s; ++l)
            b.gram(k, l) = table.quartic(monomials[static_cast<size_t>(k)].first,
                                         monomials[static_cast<size_t>(k)].second,
                                         monomials[static_cast<size_t>(l)].first,
                                         monomials[static_cast<size_t>(l)].second);
    Int128 det = determinant(b.gram);
    if (det != 1 && det != -1)
        throw BasisError("gram determinant is not a unit; the monomials are not a Z-basis");
    return b;
}

IntVector express_in_basis(const IntersectionTable& table, const BasisA2& basis,
                           std::pair<int, int> monomial) {
    const int s = static_cast<int>(basis.monomials.size());
    IntMatrix rhs(s, 1);
    for (int l = 0; l < s; ++l)
        rhs(l, 0) = table.quartic(monomial.first, monomial.second,
                                  basis.monomials[static_cast<size_t>(l)].first,
                                  basis.monomials[static_cast<size_t>(l)].second);
    auto sol = solve_integer(basis.gram, rhs);
    if (!sol) throw std::logic_error("express_in_basis: unimodular gram failed to solve");
    return sol->col(0);
}

SymbolicMatrix symbolic_lambda(const IntersectionTable& table, const BasisA2& basis,
                               const NumericalPartition& partition) {
    const int n = partition.size();
    const int s = static_cast<int>(basis.monomials.size());
    SymbolicMatrix lambda(static_cast<size_t>(n),
                          std::vector<LinearForm>(static_cast<size_t>(n), LinearForm::zero(s)));
    for (int mu = 0; mu < n; ++mu)
        for (int nu = mu; nu < n; ++nu) {
            IntVector v(s);
            for (int k = 0; k < s; ++k)
                v[k] = table.quartic(partition.representative(mu), partition.representative(nu),
                                     basis.monomials[static_cast<size_t>(k)].first,
                                     basis.monomials[static_cast<size_t>(k)].second);
            lambda[static_cast<size_t>(mu)][static_cast<size_t>(nu)] = LinearForm(v);
            lambda[static_cast<size_t>(nu)][static_cast<size_t>(mu)] = LinearForm(v);
        }
    return lambda;
}

LinearForm chern2_form(const IntersectionTable& table, const BasisA2& basis) {
    const int r = table.ray_count();
    const int s = static_cast<int>(basis.monomials.size());
    IntVector v = IntVector::Zero(s);
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j)
            for (int k = 0; k < s; ++k)
                v[k] = checked_add(v[k], table.quartic(i, j, basis.monomials[static_cast<size_t>(k)].first,
                                                       basis.monomials[static_cast<size_t>(k)].second));
    return LinearForm(v);
}

QuadraticPolynomial double_point_form(const IntersectionTable& table, const BasisA2& basis) {
    QuadraticPolynomial p;
    p.quad = basis.gram;
    p.lin = chern2_form(table, basis);
    return p;
}

}  // namespace torfano
