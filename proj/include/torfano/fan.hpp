#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "torfano/linalg.hpp"

namespace torfano {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

class FanError : public std::runtime_error {
  public:
    explicit FanError(const std::string& what) : std::runtime_error(what) {}
};

/// One primitive relation: sum of the lhs rays equals a non-negative integer
/// combination of other rays. Ray indices are 1-based throughout.
struct PrimitiveRelation {
    std::set<int> lhs;
    std::map<int, Int> rhs;  // ray index -> coefficient, all >= 1
};

/// Literature annotation for the summary report.
struct Annotation {
    std::string status;  // existing | excluded | open
    std::string citation;
};

struct FanPresentation {
    std::string variety_id;
    int ray_count = 0;
    std::vector<PrimitiveRelation> relations;
    std::vector<std::pair<int, int>> basis;  // A^2 monomials (i,j), i <= j, 1-based
    Annotation annotation;
};

/// Catalog grammar:
///   torfano-v1
///   variety <ID>
///   rays <r>
///   relation i1 i2 ... = 0 | c1*j1 + c2*j2 + ...
///   basis m1 m2 ...        with mk = i^2 or i*j
///   status <existing|excluded|open> <citation>
std::vector<FanPresentation> parse_catalog(const std::string& text);

/// Integer ray coordinates satisfying every primitive relation, with four
/// free rays (chosen greedily by lowest index among the choices that keep the
/// eliminated system unimodular) assigned the standard basis of Z^4.
std::vector<Vec4> solve_ray_coordinates(const FanPresentation& pres);

struct FaceComplex {
    std::vector<std::vector<int>> faces;          // all faces of size <= 4, lex-ordered
    std::vector<std::vector<int>> maximal_cones;  // the size-4 faces
    int euler = 0;                                // number of maximal cones
    bool is_face(const std::set<int>& subset) const;
};

/// Faces are the subsets of 1..r of size <= 4 containing no relation lhs
/// (the lhs sets are exactly the minimal non-faces).
FaceComplex build_face_complex(const FanPresentation& pres);

struct ValidationReport {
    bool is_smooth = false;
    bool is_complete = false;
    int euler = 0;
    int betti2 = 0;
    int betti4 = 0;
};

ValidationReport validate_variety(const FanPresentation& pres, const std::vector<Vec4>& coords,
                                  const FaceComplex& complex);

}  // namespace torfano
