#pragma once

#include <memory>

#include "torfano/screen.hpp"

namespace torfano {

/// Everything derived from one catalog entry: coordinates, face complex,
/// validation, quartic table, partition, basis, symbolic matrix and the
/// double-point polynomial. Immutable after construction.
struct VarietyContext {
    FanPresentation pres;
    std::vector<Vec4> coords;
    FaceComplex complex;
    ValidationReport validation;
    std::unique_ptr<IntersectionTable> table;
    NumericalPartition partition;
    BasisA2 basis;
    SymbolicMatrix lambda;
    LinearForm c2;
    QuadraticPolynomial dbp;

    int coefficient_count() const { return static_cast<int>(basis.monomials.size()); }
};

inline VarietyContext build_context(const FanPresentation& pres) {
    VarietyContext ctx;
    ctx.pres = pres;
    ctx.coords = solve_ray_coordinates(pres);
    ctx.complex = build_face_complex(pres);
    ctx.validation = validate_variety(pres, ctx.coords, ctx.complex);
    if (!ctx.validation.is_smooth || !ctx.validation.is_complete)
        throw FanError(pres.variety_id + ": fan is not smooth and complete");
    ctx.table = std::make_unique<IntersectionTable>(pres, ctx.complex, ctx.coords);
    ctx.partition = numerical_partition(*ctx.table);
    ctx.basis = check_basis(*ctx.table, pres.basis, ctx.validation.betti4);
    ctx.lambda = symbolic_lambda(*ctx.table, ctx.basis, ctx.partition);
    ctx.c2 = chern2_form(*ctx.table, ctx.basis);
    ctx.dbp = double_point_form(*ctx.table, ctx.basis);
    return ctx;
}

}  // namespace torfano
