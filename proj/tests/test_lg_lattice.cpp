#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "lgcert/errors.hpp"
#include "lgcert/lg_lattice.hpp"
#include "support/identities.hpp"

using namespace lgcert;

namespace {

AbelianGroup grp(const std::string& s) { return AbelianGroup::parse(s); }

// Membership straight from the definition.
bool in_lg_by_definition(const LgLattice& lg, const QVector& x) {
    const auto& g = lg.group;
    Rational sum = 0;
    for (const auto& v : x) sum += v;
    if (sum != 0) return false;
    GroupElement acc = g.zero();
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j].get_den() != 1) return false;
        acc = g.add(acc, g.multiple(x[j].get_num().get_si(), lg.ordering[j]));
    }
    return acc == g.zero();
}

std::vector<QVector> quadruple_vectors(const LgLattice& lg) {
    std::vector<QVector> out;
    for (const auto& q : minimal_quadruples(lg)) out.push_back(to_rational(q.vector));
    return out;
}

} // namespace

TEST_CASE("build: small groups") {
    SUBCASE("C2 is A1 stretched by 2") {
        auto lg = build_lg(grp("2"));
        REQUIRE(lg.lattice.rank() == 1);
        QVector b = lg.lattice.basis().row(0);
        CHECK(((b == QVector{2, -2}) || (b == QVector{-2, 2})));
        CHECK(min_norm_claim_check(lg) == 8);
    }
    SUBCASE("C3") {
        auto lg = build_lg(grp("3"));
        CHECK(lg.lattice.rank() == 2);
        CHECK(min_norm_claim_check(lg) == 6);
    }
    SUBCASE("C4 has index 4") { CHECK(index_in_root(build_lg(grp("4"))) == 4); }
    SUBCASE("C6 has min 4") { CHECK(min_norm_claim_check(build_lg(grp("6"))) == 4); }
    SUBCASE("trivial group rejected") { CHECK_THROWS_AS(build_lg(grp("1")), InvalidInput); }
}

TEST_CASE("build: invariants for every group up to order 16") {
    for (const auto& g : groups_up_to_order(16)) {
        if (g.order() < 2) continue;
        CAPTURE(g.name());
        auto lg = build_lg(g);
        CHECK(lg.lattice.rank() == static_cast<std::size_t>(g.order() - 1));
        CHECK(lg.lattice.ambient_dim() == static_cast<std::size_t>(g.order()));
        CHECK(index_in_root(lg) == g.order());
        for (std::size_t i = 0; i < lg.lattice.rank(); ++i) CHECK(in_lg_by_definition(lg, lg.lattice.basis().row(i)));
    }
}

TEST_CASE("build: basis generates the whole lattice (box oracle)") {
    // Every vector of the definition with entries in [-2, 2] must be an integer combination.
    for (const char* s : {"4", "2,2", "5"}) {
        auto lg = build_lg(grp(s));
        const std::size_t n = lg.size();
        ZVector x(n, Integer(-2));
        std::size_t members = 0;
        while (true) {
            QVector q = to_rational(x);
            if (in_lg_by_definition(lg, q)) {
                ++members;
                CHECK(lg.lattice.contains(q));
            } else {
                CHECK_FALSE(lg.lattice.contains(q));
            }
            std::size_t i = 0;
            while (i < n && x[i] == 2) x[i++] = -2;
            if (i == n) break;
            ++x[i];
        }
        CHECK(members > 1);
    }
}

TEST_CASE("minimal_count_formula") {
    CHECK(minimal_count_formula(5, 1) == 10);
    CHECK(minimal_count_formula(9, 1) == 108);
    CHECK(minimal_count_formula(8, 8) == 84);
    CHECK(minimal_count_formula(8, 2) == 72);
    CHECK(minimal_count_simplified(9, 1) == 108);
    CHECK_THROWS_AS(minimal_count_formula(8, 3), InvalidInput);
    CHECK_THROWS_AS(minimal_count_formula(3, 1), InvalidInput);
    // Every (n, κ) realized by a group of order 4..40.
    for (const auto& g : groups_up_to_order(40)) {
        if (g.order() < 4) continue;
        CHECK(minimal_count_formula(g.order(), two_torsion_order(g)) ==
              minimal_count_simplified(g.order(), two_torsion_order(g)));
    }
}

TEST_CASE("structural minimal vectors: examples") {
    CHECK(structural_minimal_vectors(build_lg(grp("5"))).vectors.size() == 10);
    CHECK(structural_minimal_vectors(build_lg(grp("8"))).vectors.size() == 72);
    CHECK(structural_minimal_vectors(build_lg(grp("2,2,2"))).vectors.size() == 84);
    CHECK_THROWS_AS(structural_minimal_vectors(build_lg(grp("3"))), Unsupported);
}

TEST_CASE("structural minimal vectors: quadruple invariants") {
    for (const char* s : {"4", "2,2", "6", "2,4", "9"}) {
        auto lg = build_lg(grp(s));
        const auto& g = lg.group;
        for (const auto& q : minimal_quadruples(lg)) {
            std::set<GroupElement> four{q.p, q.q, q.r, q.s};
            CHECK(four.size() == 4);
            CHECK(g.add(q.p, q.q) == g.add(q.r, q.s));
            QVector v = to_rational(q.vector);
            CHECK(norm_sq(v) == 4);
            CHECK(in_lg_by_definition(lg, v));
        }
    }
}

TEST_CASE("structural set equals the enumerated shortest vectors for n <= 12") {
    for (const auto& g : groups_up_to_order(12)) {
        if (g.order() < 4) continue;
        CAPTURE(g.name());
        auto lg = build_lg(g);
        auto structural = structural_minimal_vectors(lg);
        auto enumerated = shortest_vectors(lg.lattice);
        CHECK(enumerated.min_norm_sq == 4);
        CHECK(structural.min_norm_sq == 4);
        CHECK(structural.vectors == enumerated.vectors);
        CHECK(structural.vectors.size() ==
              minimal_count_formula(g.order(), two_torsion_order(g)).get_ui());
        // ± symmetry: the count includes both x and −x.
        std::set<QVector> set(structural.vectors.begin(), structural.vectors.end());
        CHECK(set.size() == structural.vectors.size());
        for (const auto& v : structural.vectors) CHECK(set.count(-v) == 1);
    }
}

TEST_CASE("pair classes") {
    auto lg = build_lg(grp("2,4"));
    for (const auto& pc : pair_classes(lg)) {
        CHECK(pc.ordered.size() == lg.size());
        CHECK(pc.distinct.size() + pc.halves.size() == lg.size());
    }
    auto odd = build_lg(grp("7"));
    for (const auto& pc : pair_classes(odd)) CHECK(pc.halves.size() == 1);
}

TEST_CASE("pair-sum identities for all groups with n <= 12") {
    for (const auto& g : groups_up_to_order(12)) {
        if (g.order() < 2) continue;
        CAPTURE(g.name());
        CHECK(testing::check_pair_identities(build_lg(g)) == "");
    }
}

TEST_CASE("total pair sum 4n(n-3) for odd n") {
    for (const auto& g : groups_up_to_order(15)) {
        if (g.order() % 2 == 0 || g.order() < 5) continue;
        CAPTURE(g.name());
        CHECK(testing::check_total_sum(build_lg(g)));
    }
}

TEST_CASE("f basis") {
    ZMatrix a = f_basis_matrix(4);
    CHECK(a.rows() == 4);
    CHECK(a.cols() == 3);
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(a(0, j) == 1);
        for (std::size_t i = 1; i < 4; ++i) CHECK(a(i, j) == (i == j + 1 ? -1 : 0));
    }
}

TEST_CASE("element order invariance") {
    std::mt19937 rng(20240611);
    for (const char* s : {"6", "2,4", "9", "2,2,2"}) {
        auto g = grp(s);
        auto base = build_lg(g);
        auto ordering = g.elements();
        std::shuffle(ordering.begin() + 1, ordering.end(), rng);
        auto shuffled = build_lg(g, ordering);
        CHECK(index_in_root(shuffled) == g.order());
        auto a = shortest_vectors(base.lattice);
        auto b = shortest_vectors(shuffled.lattice);
        CHECK(a.min_norm_sq == b.min_norm_sq);
        CHECK(a.vectors.size() == b.vectors.size());
        CHECK(quadruple_vectors(shuffled).size() == quadruple_vectors(base).size());
        // Relabelling coordinates maps one lattice onto the other.
        std::vector<std::size_t> perm(g.order());
        for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = shuffled.position(base.ordering[j]);
        for (const auto& v : a.vectors) {
            QVector w(v.size());
            for (std::size_t j = 0; j < v.size(); ++j) w[perm[j]] = v[j];
            CHECK(shuffled.lattice.contains(w));
        }
    }
    CHECK_THROWS_AS(build_lg(grp("4"), {{{1}}, {{0}}, {{2}}, {{3}}}), InvalidInput);
}
