#pragma once

#include <array>
#include <functional>
#include <map>

#include "torfano/fan.hpp"
#include "torfano/poly.hpp"

namespace torfano {

using Multiset4 = std::array<int, 4>;  // sorted ascending, 1-based ray indices

/// All quartic intersection numbers of the torus-invariant divisors, computed
/// by the divisor-reduction recursion and memoized over every 4-multiset.
class IntersectionTable {
  public:
    IntersectionTable(FanPresentation pres, FaceComplex complex, std::vector<Vec4> coords);

    Int quartic(int i, int j, int k, int l) const;
    Int quartic(Multiset4 m) const;

    int ray_count() const { return pres_.ray_count; }
    const FanPresentation& presentation() const { return pres_; }
    const FaceComplex& complex() const { return complex_; }
    const std::vector<Vec4>& coords() const { return coords_; }
    size_t entry_count() const { return entries_.size(); }

    /// Recomputes one multiset from scratch with a caller-supplied dual-vector
    /// chooser; used to test independence of the reduction choice.
    using DualChooser = std::function<Vec4(const IntersectionTable&, const std::vector<int>& support,
                                           int reduce_index)>;
    Int quartic_with_chooser(Multiset4 m, const DualChooser& chooser) const;

    /// The deterministic dual vector m with <m, x_i> = 1 and <m, x_t> = 0 for
    /// the other support rays (Hermite-form particular solution).
    Vec4 reduction_dual(const std::vector<int>& support, int reduce_index) const;

  private:
    FanPresentation pres_;
    FaceComplex complex_;
    std::vector<Vec4> coords_;
    std::map<Multiset4, Int> entries_;

    Int compute(Multiset4 m, std::map<Multiset4, Int>& memo, const DualChooser* chooser) const;
};

/// Groups of numerically equivalent divisor indices, ordered by their minimal
/// element; i ~ j iff the rows of the quartic table agree.
struct NumericalPartition {
    std::vector<std::vector<int>> classes;
    int class_of(int ray) const;
    int representative(int cls) const { return classes[static_cast<size_t>(cls)].front(); }
    int size() const { return static_cast<int>(classes.size()); }
};

NumericalPartition numerical_partition(const IntersectionTable& table);

struct BasisA2 {
    std::vector<std::pair<int, int>> monomials;
    IntMatrix gram;
};

class BasisError : public std::runtime_error {
  public:
    explicit BasisError(const std::string& what) : std::runtime_error(what) {}
};

/// Validates that the monomials form a Z-basis of A^2: the Poincare-pairing
/// gram matrix must be unimodular and the length must equal betti4.
BasisA2 check_basis(const IntersectionTable& table, const std::vector<std::pair<int, int>>& monomials,
                    int betti4);

/// Coordinates of [D_i D_j] in the basis (solves gram * c = pairing vector).
IntVector express_in_basis(const IntersectionTable& table, const BasisA2& basis,
                           std::pair<int, int> monomial);

/// Reduced symbolic intersection matrix: entry (mu,nu) is the linear form
/// k -> quartic(rep_mu, rep_nu, basis pair k).
using SymbolicMatrix = std::vector<std::vector<LinearForm>>;
SymbolicMatrix symbolic_lambda(const IntersectionTable& table, const BasisA2& basis,
                               const NumericalPartition& partition);

/// Pairing of the second Chern class sum_{i<j} D_i D_j with each basis element.
LinearForm chern2_form(const IntersectionTable& table, const BasisA2& basis);

/// The residual quadratic: alpha^2 - alpha . c2, i.e. quad = gram, lin = c2 pairing.
QuadraticPolynomial double_point_form(const IntersectionTable& table, const BasisA2& basis);

}  // namespace torfano
