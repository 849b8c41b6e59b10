#include "torfano/fan.hpp"

#include <algorithm>
#include <sstream>

namespace torfano {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Int parse_int(const std::string& tok, int line) {
    try {
        size_t pos = 0;
        Int v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
}

std::pair<int, int> parse_monomial(const std::string& tok, int line) {
    auto caret = tok.find('^');
    auto star = tok.find('*');
    if (caret != std::string::npos) {
        int i = static_cast<int>(parse_int(tok.substr(0, caret), line));
        if (tok.substr(caret + 1) != "2") throw ParseError(line, "basis monomial must be i^2 or i*j");
        return {i, i};
    }
    if (star != std::string::npos) {
        int i = static_cast<int>(parse_int(tok.substr(0, star), line));
        int j = static_cast<int>(parse_int(tok.substr(star + 1), line));
        if (i > j) std::swap(i, j);
        return {i, j};
    }
    throw ParseError(line, "basis monomial must be i^2 or i*j, got '" + tok + "'");
}

}  // namespace

std::vector<FanPresentation> parse_catalog(const std::string& text) {
    std::vector<FanPresentation> out;
    std::set<std::string> seen_ids;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header_seen = false;
    FanPresentation* cur = nullptr;

    auto check_ray = [&](Int idx) {
        if (cur == nullptr) throw ParseError(lineno, "directive outside a variety block");
        if (cur->ray_count <= 0) throw ParseError(lineno, "rays must be declared first");
        if (idx < 1 || idx > cur->ray_count)
            throw ParseError(lineno, "ray index " + std::to_string(idx) + " out of range 1.." +
                                         std::to_string(cur->ray_count));
        return static_cast<int>(idx);
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto tok = tokenize(line);
        if (tok.empty()) continue;
        if (!header_seen) {
            if (tok.size() != 1 || tok[0] != "torfano-v1")
                throw ParseError(lineno, "missing torfano-v1 header");
            header_seen = true;
            continue;
        }
        const std::string& kw = tok[0];
        if (kw == "variety") {
            if (tok.size() != 2) throw ParseError(lineno, "variety takes one name");
            if (!seen_ids.insert(tok[1]).second)
                throw ParseError(lineno, "duplicate variety id '" + tok[1] + "'");
            out.emplace_back();
            cur = &out.back();
            cur->variety_id = tok[1];
        } else if (kw == "rays") {
            if (cur == nullptr) throw ParseError(lineno, "rays outside a variety block");
            if (tok.size() != 2) throw ParseError(lineno, "rays takes one count");
            cur->ray_count = static_cast<int>(parse_int(tok[1], lineno));
            if (cur->ray_count < 5) throw ParseError(lineno, "a complete 4-fold needs at least 5 rays");
        } else if (kw == "relation") {
            PrimitiveRelation rel;
            size_t k = 1;
            while (k < tok.size() && tok[k] != "=") {
                int idx = check_ray(parse_int(tok[k], lineno));
                if (!rel.lhs.insert(idx).second) throw ParseError(lineno, "repeated lhs ray");
                ++k;
            }
            if (k == tok.size()) throw ParseError(lineno, "relation needs '='");
            ++k;
            if (k == tok.size()) throw ParseError(lineno, "relation needs a right-hand side");
            if (tok[k] == "0" && k + 1 == tok.size()) {
                // empty rhs
            } else {
                bool expect_term = true;
                for (; k < tok.size(); ++k) {
                    if (tok[k] == "+") {
                        if (expect_term) throw ParseError(lineno, "misplaced '+'");
                        expect_term = true;
                        continue;
                    }
                    if (!expect_term) throw ParseError(lineno, "missing '+' between terms");
                    Int coeff = 1;
                    std::string term = tok[k];
                    auto star = term.find('*');
                    Int idx;
                    if (star != std::string::npos) {
                        coeff = parse_int(term.substr(0, star), lineno);
                        idx = parse_int(term.substr(star + 1), lineno);
                    } else {
                        idx = parse_int(term, lineno);
                    }
                    if (coeff < 1) throw ParseError(lineno, "rhs coefficients must be positive");
                    int i = check_ray(idx);
                    if (rel.lhs.count(i)) throw ParseError(lineno, "rhs ray also appears on lhs");
                    rel.rhs[i] += coeff;
                    expect_term = false;
                }
                if (expect_term) throw ParseError(lineno, "dangling '+'");
            }
            if (rel.lhs.size() < 2 || rel.lhs.size() > 5)
                throw ParseError(lineno, "primitive collection size must be 2..5");
            for (const auto& other : cur->relations)
                if (other.lhs == rel.lhs) throw ParseError(lineno, "duplicate primitive collection");
            cur->relations.push_back(std::move(rel));
        } else if (kw == "basis") {
            if (cur == nullptr) throw ParseError(lineno, "basis outside a variety block");
            for (size_t i = 1; i < tok.size(); ++i) {
                auto mono = parse_monomial(tok[i], lineno);
                check_ray(mono.first);
                check_ray(mono.second);
                cur->basis.push_back(mono);
            }
        } else if (kw == "status") {
            if (cur == nullptr) throw ParseError(lineno, "status outside a variety block");
            if (tok.size() < 2) throw ParseError(lineno, "status takes a kind and citation");
            if (tok[1] != "existing" && tok[1] != "excluded" && tok[1] != "open")
                throw ParseError(lineno, "status kind must be existing|excluded|open");
            cur->annotation.status = tok[1];
            std::string cite;
            for (size_t i = 2; i < tok.size(); ++i) {
                if (!cite.empty()) cite += ' ';
                cite += tok[i];
            }
            cur->annotation.citation = cite;
        } else {
            throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
    }
    if (!header_seen) throw ParseError(1, "missing torfano-v1 header");
    return out;
}

namespace {

// Relation matrix: one row per relation over ray columns (1-based rays ->
// columns 0..r-1): sum over lhs minus rhs coefficients.
IntMatrix relation_matrix(const FanPresentation& pres) {
    IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(pres.relations.size()), pres.ray_count);
    for (size_t k = 0; k < pres.relations.size(); ++k) {
        for (int i : pres.relations[k].lhs) m(static_cast<Eigen::Index>(k), i - 1) += 1;
        for (auto& [i, c] : pres.relations[k].rhs) m(static_cast<Eigen::Index>(k), i - 1) -= c;
    }
    return m;
}

IntMatrix select_columns(const IntMatrix& m, const std::vector<int>& cols) {
    IntMatrix out(m.rows(), static_cast<Eigen::Index>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Eigen::Index>(j)) = m.col(cols[j]);
    return out;
}

// Can the current partial free set still be completed to a full one whose
// complement solves unimodularly?
bool completable(const IntMatrix& m, const std::vector<int>& free_cols, int next, int r) {
    std::vector<int> rest;
    for (int j = next; j < r; ++j) rest.push_back(j);
    int need = 4 - static_cast<int>(free_cols.size());
    if (need < 0 || need > static_cast<int>(rest.size())) return false;
    std::vector<int> pick(static_cast<size_t>(need), 0);
    std::function<bool(size_t, size_t)> rec = [&](size_t depth, size_t start) -> bool {
        if (depth == pick.size()) {
            std::vector<bool> is_free(static_cast<size_t>(r), false);
            for (int j : free_cols) is_free[static_cast<size_t>(j)] = true;
            for (size_t t = 0; t < pick.size(); ++t) is_free[static_cast<size_t>(rest[pick[t]])] = true;
            std::vector<int> elim;
            for (int j = 0; j < r; ++j)
                if (!is_free[static_cast<size_t>(j)]) elim.push_back(j);
            IntMatrix sub = select_columns(m, elim);
            return rank(sub) == r - 4 && spans_saturated_lattice(sub);
        }
        for (size_t j = start; j < rest.size(); ++j) {
            pick[depth] = static_cast<int>(j);
            if (rec(depth + 1, j + 1)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace

std::vector<Vec4> solve_ray_coordinates(const FanPresentation& pres) {
    const int r = pres.ray_count;
    IntMatrix m = relation_matrix(pres);
    if (rank(m) != r - 4)
        throw FanError(pres.variety_id + ": relation system has rank " + std::to_string(rank(m)) +
                       ", expected " + std::to_string(r - 4));
    std::vector<int> free_cols;
    for (int j = 0; j < r && static_cast<int>(free_cols.size()) < 4; ++j) {
        free_cols.push_back(j);
        if (!completable(m, free_cols, j + 1, r)) free_cols.pop_back();
    }
    if (static_cast<int>(free_cols.size()) != 4)
        throw FanError(pres.variety_id + ": no unimodular elimination order exists");
    std::vector<int> elim;
    {
        std::vector<bool> is_free(static_cast<size_t>(r), false);
        for (int j : free_cols) is_free[static_cast<size_t>(j)] = true;
        for (int j = 0; j < r; ++j)
            if (!is_free[static_cast<size_t>(j)]) elim.push_back(j);
    }
    IntMatrix sub = select_columns(m, elim);
    // rhs for the eliminated rays: -M_free, one column per standard basis slot.
    IntMatrix rhs = -select_columns(m, free_cols);
    auto sol = solve_integer(sub, rhs);
    if (!sol) throw FanError(pres.variety_id + ": eliminated system is not unimodular");
    std::vector<Vec4> coords(static_cast<size_t>(r), Vec4::Zero());
    for (int k = 0; k < 4; ++k) coords[static_cast<size_t>(free_cols[k])][k] = 1;
    for (size_t t = 0; t < elim.size(); ++t)
        for (int k = 0; k < 4; ++k) coords[static_cast<size_t>(elim[t])][k] = (*sol)(static_cast<Eigen::Index>(t), k);
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].isZero())
            throw FanError(pres.variety_id + ": solved ray " + std::to_string(i + 1) + " is zero");
        if (!is_primitive(coords[i]))
            throw FanError(pres.variety_id + ": solved ray " + std::to_string(i + 1) +
                           " is imprimitive");
    }
    // Re-substitute every relation.
    for (const auto& rel : pres.relations) {
        Vec4 acc = Vec4::Zero();
        for (int i : rel.lhs) acc += coords[static_cast<size_t>(i - 1)];
        for (auto& [i, c] : rel.rhs) acc -= c * coords[static_cast<size_t>(i - 1)];
        if (!acc.isZero())
            throw FanError(pres.variety_id + ": solved coordinates violate a relation");
    }
    return coords;
}

bool FaceComplex::is_face(const std::set<int>& subset) const {
    std::vector<int> v(subset.begin(), subset.end());
    return std::binary_search(faces.begin(), faces.end(), v);
}

FaceComplex build_face_complex(const FanPresentation& pres) {
    FaceComplex out;
    const int r = pres.ray_count;
    std::vector<std::vector<int>> lhss;
    for (const auto& rel : pres.relations) lhss.emplace_back(rel.lhs.begin(), rel.lhs.end());
    auto contains_collection = [&](const std::vector<int>& subset) {
        for (const auto& l : lhss)
            if (std::includes(subset.begin(), subset.end(), l.begin(), l.end())) return true;
        return false;
    };
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (!cur.empty()) {
            if (contains_collection(cur)) return;
            out.faces.push_back(cur);
            if (cur.size() == 4) out.maximal_cones.push_back(cur);
        }
        if (cur.size() == 4) return;
        for (int i = start; i <= r; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    out.faces.push_back({});  // the empty face
    rec(1);
    std::sort(out.faces.begin(), out.faces.end());
    std::sort(out.maximal_cones.begin(), out.maximal_cones.end());
    out.euler = static_cast<int>(out.maximal_cones.size());
    return out;
}

ValidationReport validate_variety(const FanPresentation& pres, const std::vector<Vec4>& coords,
                                  const FaceComplex& complex) {
    ValidationReport rep;
    rep.euler = complex.euler;
    rep.betti2 = pres.ray_count - 4;
    rep.betti4 = rep.euler - 2 * rep.betti2 - 2;

    rep.is_smooth = true;
    for (const auto& cone : complex.maximal_cones) {
        IntMatrix m(4, 4);
        for (int k = 0; k < 4; ++k) m.row(k) = coords[static_cast<size_t>(cone[static_cast<size_t>(k)] - 1)].transpose();
        Int128 d = determinant(m);
        if (d != 1 && d != -1) {
            rep.is_smooth = false;
            break;
        }
    }

    // Completeness: every 3-face lies in exactly two maximal cones, and the
    // dual graph glued along 3-faces is connected.
    rep.is_complete = !complex.maximal_cones.empty();
    std::map<std::vector<int>, std::vector<int>> ridge_to_cones;
    for (size_t c = 0; c < complex.maximal_cones.size(); ++c) {
        const auto& cone = complex.maximal_cones[c];
        for (int drop = 0; drop < 4; ++drop) {
            std::vector<int> ridge;
            for (int k = 0; k < 4; ++k)
                if (k != drop) ridge.push_back(cone[static_cast<size_t>(k)]);
            ridge_to_cones[ridge].push_back(static_cast<int>(c));
        }
    }
    for (const auto& f : complex.faces) {
        if (f.size() != 3) continue;
        auto it = ridge_to_cones.find(f);
        if (it == ridge_to_cones.end() || it->second.size() != 2) {
            rep.is_complete = false;
            break;
        }
    }
    if (rep.is_complete) {
        std::vector<int> seen(complex.maximal_cones.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int c = stack.back();
            stack.pop_back();
            const auto& cone = complex.maximal_cones[static_cast<size_t>(c)];
            for (int drop = 0; drop < 4; ++drop) {
                std::vector<int> ridge;
                for (int k = 0; k < 4; ++k)
                    if (k != drop) ridge.push_back(cone[static_cast<size_t>(k)]);
                for (int other : ridge_to_cones[ridge])
                    if (!seen[static_cast<size_t>(other)]) {
                        seen[static_cast<size_t>(other)] = 1;
                        ++count;
                        stack.push_back(other);
                    }
            }
        }
        if (count != static_cast<int>(complex.maximal_cones.size())) rep.is_complete = false;
    }
    return rep;
}

}  // namespace torfano
