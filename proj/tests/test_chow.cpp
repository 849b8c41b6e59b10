#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "torfano/context.hpp"
#include "torfano/data.hpp"

using namespace torfano;

namespace {

const VarietyContext& ctx(const std::string& id) {
    static std::map<std::string, std::unique_ptr<VarietyContext>> cache;
    auto it = cache.find(id);
    if (it == cache.end()) {
        for (const auto& p : parse_catalog(data::catalog_text()))
            if (p.variety_id == id) {
                it = cache.emplace(id, std::make_unique<VarietyContext>(build_context(p))).first;
                return *it->second;
            }
        throw std::runtime_error("no catalog entry " + id);
    }
    return *it->second;
}

std::vector<std::string> all_ids() {
    std::vector<std::string> ids;
    for (const auto& p : parse_catalog(data::catalog_text())) ids.push_back(p.variety_id);
    return ids;
}

}  // namespace

TEST_CASE("quartic numbers: hand-reduced values on C1") {
    const auto& c = ctx("C1");
    // oracle: reduce D3^2 by hand through the linear relations
    CHECK(c.table->quartic(3, 3, 6, 6) == 1);
    CHECK(c.table->quartic(3, 3, 3, 3) == 4);
    CHECK(c.table->quartic(3, 3, 3, 6) == 2);
    CHECK(c.table->quartic(3, 6, 6, 6) == 0);
    CHECK(c.table->quartic(6, 6, 6, 6) == 0);
    // Stanley-Reisner vanishing
    CHECK(c.table->quartic(1, 2, 3, 4) == 0);
    CHECK(c.table->quartic(4, 5, 6, 6) == 0);
    // maximal cone
    CHECK(c.table->quartic(2, 3, 4, 6) == 1);
}

TEST_CASE("quartic numbers: projective space") {
    const auto& p = ctx("P4");
    for (int i = 1; i <= 5; ++i)
        for (int j = i; j <= 5; ++j)
            for (int k = j; k <= 5; ++k)
                for (int l = k; l <= 5; ++l) CHECK(p.table->quartic(i, j, k, l) == 1);
    CHECK(p.table->entry_count() == 70);  // C(8,4)
}

TEST_CASE("intersection table: sizes") {
    CHECK(ctx("C1").table->entry_count() == 126);  // C(9,4)
    CHECK(ctx("D10").table->entry_count() == 210);
}

TEST_CASE("quartic numbers do not depend on the reduction dual vector") {
    std::mt19937 rng(2024);
    for (const std::string& id : {"C1", "D7", "I9"}) {
        const auto& c = ctx(id);
        const int r = c.pres.ray_count;
        IntersectionTable::DualChooser random_chooser =
            [&rng](const IntersectionTable& t, const std::vector<int>& support, int reduce_index) {
                Vec4 base = t.reduction_dual(support, reduce_index);
                // add a random element of the kernel of the support constraints
                IntMatrix rows(static_cast<Eigen::Index>(support.size()), 4);
                for (size_t i = 0; i < support.size(); ++i)
                    rows.row(static_cast<Eigen::Index>(i)) =
                        t.coords()[static_cast<size_t>(support[i] - 1)].transpose();
                IntMatrix ker = integer_kernel(rows);
                for (Eigen::Index k = 0; k < ker.cols(); ++k) {
                    Int coeff = static_cast<Int>(rng() % 7) - 3;
                    base += coeff * Vec4(ker(0, k), ker(1, k), ker(2, k), ker(3, k));
                }
                return base;
            };
        for (int trial = 0; trial < 40; ++trial) {
            Multiset4 m;
            for (auto& x : m) x = 1 + static_cast<int>(rng() % static_cast<unsigned>(r));
            std::sort(m.begin(), m.end());
            CHECK(c.table->quartic(m) == c.table->quartic_with_chooser(m, random_chooser));
        }
    }
}

TEST_CASE("linear-relation identity holds for every dual basis vector and triple") {
    for (const auto& id : all_ids()) {
        const auto& c = ctx(id);
        const int r = c.pres.ray_count;
        for (int axis = 0; axis < 4; ++axis) {
            for (int k = 1; k <= r; ++k)
                for (int l = k; l <= r; ++l)
                    for (int n = l; n <= r; ++n) {
                        Int acc = 0;
                        for (int j = 1; j <= r; ++j)
                            acc += c.coords[static_cast<size_t>(j - 1)][axis] * c.table->quartic(j, k, l, n);
                        REQUIRE(acc == 0);
                    }
        }
    }
}

TEST_CASE("numerical partition: reference groupings") {
    // C1/C2: the base divisors 4,5,6 are pullbacks of hyperplanes and merge;
    // the engine recomputation is authoritative here.
    CHECK(ctx("C1").partition.classes ==
          std::vector<std::vector<int>>{{1}, {2, 3}, {4, 5, 6}});
    CHECK(ctx("C2").partition.classes ==
          std::vector<std::vector<int>>{{1}, {2, 3}, {4, 5, 6}});
    CHECK(ctx("C3").partition.classes ==
          std::vector<std::vector<int>>{{1, 2}, {3}, {4, 5, 6}});
    CHECK(ctx("V4").partition.size() == 10);  // no two divisors equivalent
    CHECK(ctx("W").partition.size() == 9);
    CHECK(ctx("L13").partition.classes ==
          std::vector<std::vector<int>>{{1}, {2, 3}, {4, 5}, {6, 7}, {8}});
    CHECK(ctx("D7").partition.classes ==
          std::vector<std::vector<int>>{{1}, {2, 3}, {4, 5}, {6, 7}});
    CHECK(ctx("P4").partition.size() == 1);
}

TEST_CASE("basis validation: unimodular gram for every catalog basis") {
    for (const auto& id : all_ids()) {
        const auto& c = ctx(id);
        INFO(id);
        Int128 det = determinant(c.basis.gram);
        CHECK((det == 1 || det == -1));
        CHECK(static_cast<int>(c.basis.monomials.size()) == c.validation.betti4);
    }
}

TEST_CASE("basis validation: duplicate monomials are rejected") {
    const auto& c = ctx("C1");
    CHECK_THROWS_AS(check_basis(*c.table, {{3, 3}, {3, 6}, {3, 6}}, 3), BasisError);
    CHECK_THROWS_AS(check_basis(*c.table, {{3, 3}, {3, 6}}, 3), BasisError);
}

TEST_CASE("express_in_basis: unit vectors, round trips, and the C3 mixed product") {
    const auto& c1 = ctx("C1");
    for (int k = 0; k < 3; ++k) {
        IntVector v = express_in_basis(*c1.table, c1.basis, c1.basis.monomials[static_cast<size_t>(k)]);
        for (int l = 0; l < 3; ++l) CHECK(v[l] == (l == k ? 1 : 0));
    }
    // round trip on random monomials: re-pairing reproduces the pairing vector
    for (const std::string& id : {"C1", "D17", "Q16"}) {
        const auto& c = ctx(id);
        const int r = c.pres.ray_count;
        for (int i = 1; i <= r; ++i)
            for (int j = i; j <= r; ++j) {
                IntVector v = express_in_basis(*c.table, c.basis, {i, j});
                IntVector pairing = c.basis.gram * v;
                for (size_t l = 0; l < c.basis.monomials.size(); ++l)
                    CHECK(pairing[static_cast<Eigen::Index>(l)] ==
                          c.table->quartic(i, j, c.basis.monomials[l].first, c.basis.monomials[l].second));
            }
    }
    // C3: D1 D6 decomposes so that the (1,3) entry of the symbolic matrix is a+b
    const auto& c3 = ctx("C3");
    IntVector v = express_in_basis(*c3.table, c3.basis, {1, 6});
    IntVector pairing = c3.basis.gram * v;
    LinearForm expect = parse_linear_form("a+b", 3);
    CHECK(IntVector(pairing) == expect.coeffs);
}

TEST_CASE("symbolic matrix: C1 named entries") {
    const auto& c = ctx("C1");
    REQUIRE(c.partition.size() == 3);
    CHECK(to_string(c.lambda[2][2]) == "a");
    CHECK(to_string(c.lambda[0][1]) == "c");
    CHECK(to_string(c.lambda[0][2]) == "b");
}

TEST_CASE("symbolic matrix: symmetry and equal rows within an equivalence class") {
    for (const auto& id : all_ids()) {
        const auto& c = ctx(id);
        const int n = c.partition.size();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(c.lambda[size_t(i)][size_t(j)] == c.lambda[size_t(j)][size_t(i)]);
        // all representatives of one class give the same linear forms
        for (int cls = 0; cls < n; ++cls)
            for (int member : c.partition.classes[size_t(cls)])
                for (int other = 0; other < n; ++other) {
                    IntVector v(c.coefficient_count());
                    for (int k = 0; k < c.coefficient_count(); ++k)
                        v[k] = c.table->quartic(member, c.partition.representative(other),
                                                c.basis.monomials[size_t(k)].first,
                                                c.basis.monomials[size_t(k)].second);
                    CHECK(IntVector(v) == c.lambda[size_t(cls)][size_t(other)].coeffs);
                }
    }
}

TEST_CASE("chern2 pairing: reference vectors") {
    CHECK(to_string(ctx("C1").c2) == "19a+11b+3c");
    CHECK(to_string(ctx("C2").c2) == "10a+10b+3c");
    CHECK(to_string(ctx("P4").c2) == "10a");
}

TEST_CASE("double-point polynomial: printed forms") {
    CHECK(to_string(ctx("C1").dbp) == "4a^2+4ab+b^2+2ac-19a-11b-3c");
    CHECK(to_string(ctx("C2").dbp) == "a^2+2ab+b^2+2ac-10a-10b-3c");
    CHECK(to_string(ctx("C3").dbp) == "3a^2+4ab+b^2+2ac-17a-11b-3c");
}

TEST_CASE("double-point polynomial: projective space has zero set {0, 10}") {
    const auto& p = ctx("P4");
    IntVector a(1);
    std::vector<Int> zeros;
    for (Int n = -30; n <= 30; ++n) {
        a[0] = n;
        if (p.dbp.value_at(a) == 0) zeros.push_back(n);
    }
    CHECK(zeros == std::vector<Int>{0, 10});
    a[0] = 7;
    CHECK(p.dbp.value_at(a) == -21);
}

TEST_CASE("D10 symbolic matrix: printed row") {
    const auto& c = ctx("D10");
    REQUIRE(c.partition.size() == 5);
    // row of the class {6}: (-a, -a+c, c, a-c, 0)
    CHECK(to_string(c.lambda[3][0]) == "-a");
    CHECK(to_string(c.lambda[3][1]) == "-a+c");
    CHECK(to_string(c.lambda[3][2]) == "c");
    CHECK(to_string(c.lambda[3][3]) == "a-c");
    CHECK(to_string(c.lambda[3][4]) == "0");
}

TEST_CASE("D18 symbolic matrix: the full printed display") {
    const auto& c = ctx("D18");
    REQUIRE(c.partition.size() == 4);
    const char* expected[4][4] = {
        {"c", "b", "a", "a+b-2c"},
        {"b", "0", "d", "-2b+d"},
        {"a", "d", "2a-d", "0"},
        {"a+b-2c", "-2b+d", "0", "-2a-4b+4c+d"},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(to_string(c.lambda[size_t(i)][size_t(j)]) == expected[i][j]);
}

TEST_CASE("gram matrices match an independent signature oracle") {
    for (const auto& id : all_ids()) {
        const auto& c = ctx(id);
        auto sig = oracles::congruent_signature(c.basis.gram);
        CHECK(sig.rank() == c.validation.betti4);  // unimodular pairing is nondegenerate
    }
}
