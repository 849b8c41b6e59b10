#include "torfano/screen.hpp"

#include <sstream>

namespace torfano {

EvaluatedMatrix evaluate_lambda(const SymbolicMatrix& lambda, const CandidateClass& candidate) {
    const int n = static_cast<int>(lambda.size());
    EvaluatedMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (static_cast<int>(lambda[static_cast<size_t>(i)].size()) != n)
                throw std::logic_error("evaluate_lambda: ragged symbolic matrix");
            m(i, j) = lambda[static_cast<size_t>(i)][static_cast<size_t>(j)].value_at(candidate);
        }
    return m;
}

std::string rule_label(Rule r) {
    switch (r) {
        case Rule::RankSignature: return "i";
        case Rule::EvenNonneg: return "ii";
        case Rule::ZeroPropagation: return "iii";
        case Rule::PositiveRow: return "iv";
        case Rule::ProportionalRows: return "v";
        case Rule::EllipticPencil: return "vi";
        case Rule::DoublePoint: return "dp";
        case Rule::Side: return "side";
    }
    return "?";
}

bool RuleReport::pass() const {
    return rank_signature.pass && even_nonneg.pass && zero_propagation.pass && positive_row.pass &&
           proportional_rows.pass && elliptic_pencil.pass && double_point.pass && side.pass;
}

std::string RuleReport::failing_rules() const {
    std::string out;
    auto add = [&](const RuleVerdict& v, Rule r) {
        if (!v.pass) {
            if (!out.empty()) out += ',';
            out += rule_label(r);
        }
    };
    add(rank_signature, Rule::RankSignature);
    add(even_nonneg, Rule::EvenNonneg);
    add(zero_propagation, Rule::ZeroPropagation);
    add(positive_row, Rule::PositiveRow);
    add(proportional_rows, Rule::ProportionalRows);
    add(elliptic_pencil, Rule::EllipticPencil);
    add(double_point, Rule::DoublePoint);
    add(side, Rule::Side);
    return out;
}

namespace {

void line(std::ostringstream& out, const char* label, const RuleVerdict& v, const std::string& extra = "") {
    out << "rule " << label << ": " << (v.pass ? "pass" : "FAIL");
    if (!extra.empty()) out << ' ' << extra;
    if (!v.pass) {
        if (v.wi >= 0) {
            out << " witness (" << v.wi + 1;
            if (v.wj >= 0) out << ',' << v.wj + 1;
            out << ')';
        }
        if (!v.detail.empty()) out << ' ' << v.detail;
    }
    out << '\n';
}

}  // namespace

std::string RuleReport::to_text() const {
    std::ostringstream out;
    line(out, "i", rank_signature, "rank=" + std::to_string(rank));
    line(out, "ii", even_nonneg);
    line(out, "iii", zero_propagation);
    line(out, "iv", positive_row);
    line(out, "v", proportional_rows);
    line(out, "vi", elliptic_pencil);
    line(out, "dp", double_point);
    line(out, "side", side);
    return out.str();
}

RuleVerdict check_rank_signature(const EvaluatedMatrix& m, int* rank_out) {
    if (m.rows() != m.cols() || m != m.transpose())
        throw std::logic_error("check_rank_signature: matrix must be symmetric");
    RuleVerdict v;
    auto coeffs = characteristic_polynomial(m);
    int zero_mult = zero_root_multiplicity(coeffs);
    int e = static_cast<int>(m.rows()) - zero_mult;
    int positives = sign_variations(coeffs);
    if (rank_out != nullptr) *rank_out = e;
    if (e < 1 || e > 4 || positives != 1) {
        v.pass = false;
        v.detail = "rank=" + std::to_string(e) + " positives=" + std::to_string(positives);
    }
    return v;
}

void check_lemma_rules(const EvaluatedMatrix& m, RuleReport& report) {
    const int n = static_cast<int>(m.rows());
    // ii: even diagonal, no negative entries.
    report.even_nonneg = RuleVerdict{};
    for (int i = 0; i < n && report.even_nonneg.pass; ++i)
        for (int j = 0; j < n; ++j) {
            if (m(i, j) < 0) {
                report.even_nonneg = {false, i, j, "negative entry " + std::to_string(m(i, j))};
                break;
            }
            if (i == j && m(i, i) % 2 != 0) {
                report.even_nonneg = {false, i, i, "odd diagonal " + std::to_string(m(i, i))};
                break;
            }
        }
    // iii: a vanishing entry forces both diagonal entries to vanish.
    report.zero_propagation = RuleVerdict{};
    for (int i = 0; i < n && report.zero_propagation.pass; ++i)
        for (int j = 0; j < n; ++j)
            if (m(i, j) == 0 && (m(i, i) != 0 || m(j, j) != 0)) {
                report.zero_propagation = {false, i, j, "zero entry with nonzero square"};
                break;
            }
    // iv: every row has a positive entry.
    report.positive_row = RuleVerdict{};
    for (int i = 0; i < n; ++i) {
        bool pos = false;
        for (int j = 0; j < n; ++j)
            if (m(i, j) > 0) {
                pos = true;
                break;
            }
        if (!pos) {
            report.positive_row = {false, i, -1, "row without positive entry"};
            break;
        }
    }
    // v: rows meeting in a zero off-diagonal entry are proportional.
    report.proportional_rows = RuleVerdict{};
    for (int i = 0; i < n && report.proportional_rows.pass; ++i)
        for (int j = i + 1; j < n && report.proportional_rows.pass; ++j) {
            if (m(i, j) != 0) continue;
            for (int k = 0; k < n && report.proportional_rows.pass; ++k)
                for (int l = 0; l < n; ++l) {
                    Int det = checked_sub(checked_mul(m(i, k), m(j, l)), checked_mul(m(i, l), m(j, k)));
                    if (det != 0) {
                        report.proportional_rows = {false, i, j,
                                                    "minor (" + std::to_string(k + 1) + "," +
                                                        std::to_string(l + 1) + ") nonzero"};
                        break;
                    }
                }
        }
    // vi: L_ii = 0 and L_ij = 1 force 2 L_jk >= L_jj L_ik for all k.
    report.elliptic_pencil = RuleVerdict{};
    for (int i = 0; i < n && report.elliptic_pencil.pass; ++i) {
        if (m(i, i) != 0) continue;
        for (int j = 0; j < n && report.elliptic_pencil.pass; ++j) {
            if (j == i || m(i, j) != 1) continue;
            for (int k = 0; k < n; ++k)
                if (checked_mul(Int(2), m(j, k)) < checked_mul(m(j, j), m(i, k))) {
                    report.elliptic_pencil = {false, i, j,
                                              "2L[" + std::to_string(j + 1) + "," + std::to_string(k + 1) +
                                                  "] < L[" + std::to_string(j + 1) + "," +
                                                  std::to_string(j + 1) + "]L[" + std::to_string(i + 1) +
                                                  "," + std::to_string(k + 1) + "]"};
                    break;
                }
        }
    }
}

Int check_double_point(const QuadraticPolynomial& form, const CandidateClass& candidate) {
    return form.value_at(candidate);
}

Int SideConstraint::targeted_value(const CandidateClass& candidate, const EvaluatedMatrix& m) const {
    if (target == Target::Entry) return m(i - 1, j - 1);
    return candidate[i];
}

bool SideConstraint::satisfied(const CandidateClass& candidate, const EvaluatedMatrix& m) const {
    Int v = targeted_value(candidate, m);
    if (zero_allowed && v == 0) return true;
    return v >= lower;
}

RuleVerdict check_side_constraints(const std::vector<SideConstraint>& constraints,
                                   const CandidateClass& candidate, const EvaluatedMatrix& m) {
    RuleVerdict v;
    for (const auto& sc : constraints)
        if (!sc.satisfied(candidate, m)) {
            v.pass = false;
            v.wi = sc.i - 1;
            v.wj = sc.target == SideConstraint::Target::Entry ? sc.j - 1 : -1;
            v.detail = sc.provenance;
            return v;
        }
    return v;
}

RuleReport screen_candidate(const SymbolicMatrix& lambda, const QuadraticPolynomial& dbp,
                            const std::vector<SideConstraint>& side, const CandidateClass& candidate) {
    RuleReport rep;
    EvaluatedMatrix m = evaluate_lambda(lambda, candidate);
    rep.side = check_side_constraints(side, candidate, m);
    check_lemma_rules(m, rep);
    Int residual = check_double_point(dbp, candidate);
    if (residual != 0)
        rep.double_point = {false, -1, -1, "residual " + std::to_string(residual)};
    rep.rank_signature = check_rank_signature(m, &rep.rank);
    return rep;
}

}  // namespace torfano
