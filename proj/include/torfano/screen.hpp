#pragma once

#include <optional>
#include <string>

#include "torfano/chow.hpp"

namespace torfano {

/// Integer coefficient tuple over a case's A^2-basis.
using CandidateClass = IntVector;

/// The reduced intersection matrix evaluated at a candidate.
using EvaluatedMatrix = IntMatrix;

EvaluatedMatrix evaluate_lambda(const SymbolicMatrix& lambda, const CandidateClass& candidate);

enum class Rule { RankSignature, EvenNonneg, ZeroPropagation, PositiveRow, ProportionalRows, EllipticPencil, DoublePoint, Side };

/// Stable external labels: i ii iii iv v vi dp side.
std::string rule_label(Rule r);

struct RuleVerdict {
    bool pass = true;
    // Witness on failure: an entry position, or a row for the row rules.
    int wi = -1;
    int wj = -1;
    std::string detail;
};

struct RuleReport {
    RuleVerdict rank_signature;  // i
    int rank = 0;                // e, filled by rule i
    RuleVerdict even_nonneg;     // ii
    RuleVerdict zero_propagation;   // iii
    RuleVerdict positive_row;       // iv
    RuleVerdict proportional_rows;  // v
    RuleVerdict elliptic_pencil;    // vi
    RuleVerdict double_point;       // dp
    RuleVerdict side;               // side
    bool pass() const;
    /// Names the failing rules, e.g. "vi"; empty when all pass.
    std::string failing_rules() const;
    std::string to_text() const;
};

/// Rule i: rank e with 1 <= e <= 4 and exactly one positive eigenvalue,
/// via the exact characteristic polynomial (sign variations count the
/// positive roots; rank is the degree minus the zero-root multiplicity).
RuleVerdict check_rank_signature(const EvaluatedMatrix& m, int* rank_out = nullptr);

/// Rules ii-vi on the evaluated matrix; total, never throws on content.
void check_lemma_rules(const EvaluatedMatrix& m, RuleReport& report);

/// Exact residual of the double-point constraint; pass iff zero.
Int check_double_point(const QuadraticPolynomial& form, const CandidateClass& candidate);

/// A numeric condition imported as data: the targeted value must lie in
/// {0} u [lower, inf) or in [lower, inf).
struct SideConstraint {
    enum class Target { Entry, Coefficient } target = Target::Entry;
    int i = 0;  // entry row (1-based class index) or coefficient index (0-based)
    int j = 0;  // entry column
    bool zero_allowed = false;
    Int lower = 1;
    std::string provenance;
    bool satisfied(const CandidateClass& candidate, const EvaluatedMatrix& m) const;
    Int targeted_value(const CandidateClass& candidate, const EvaluatedMatrix& m) const;
};

RuleVerdict check_side_constraints(const std::vector<SideConstraint>& constraints,
                                   const CandidateClass& candidate, const EvaluatedMatrix& m);

/// Runs the whole battery in the standard order.
RuleReport screen_candidate(const SymbolicMatrix& lambda, const QuadraticPolynomial& dbp,
                            const std::vector<SideConstraint>& side, const CandidateClass& candidate);

}  // namespace torfano
