#include "doctest.h"

#include "lgcert/errors.hpp"
#include "lgcert/eutaxy.hpp"
#include "lgcert/lg_lattice.hpp"
#include "support/identities.hpp"

using namespace lgcert;

namespace {

AbelianGroup grp(const std::string& s) { return AbelianGroup::parse(s); }

QVector e(std::size_t dim, std::size_t i, long s = 1) {
    QVector v(dim);
    v[i] = s;
    return v;
}

// Σ_{x∈S} (x, y)² compared with c·‖y‖² for y in a spanning set: the form-level
// restatement of strong eutaxy, evaluated without building P_span.
bool form_identity(const Lattice& l, const MinimalVectorSet& s) {
    const Rational c = s.min_norm_sq * static_cast<long>(s.vectors.size()) / static_cast<long>(l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.rank(); ++j) {
            const QVector bi = l.basis().row(i), bj = l.basis().row(j);
            Rational sum = 0;
            for (const auto& x : s.vectors) sum += dot(x, bi) * dot(x, bj);
            if (sum != c * dot(bi, bj)) return false;
        }
    return true;
}

} // namespace

TEST_CASE("strong eutaxy examples") {
    auto z2 = strong_eutaxy_check(integer_lattice(2));
    CHECK(z2.verdict);
    CHECK(z2.constant == 2);
    CHECK(z2.second_moment == 2 * QMatrix::identity(2));

    auto c6 = strong_eutaxy_check(build_lg(grp("6")).lattice);
    CHECK_FALSE(c6.verdict);
    CHECK_FALSE(is_zero(c6.discrepancy));

    auto lg5 = build_lg(grp("5"));
    auto c5 = strong_eutaxy_check(lg5.lattice);
    CHECK(c5.verdict);
    CHECK(c5.rank == 4);
    CHECK(c5.count == 10);
    CHECK(c5.constant == 10);
    CHECK(c5.second_moment == 10 * span_projector(lg5.lattice));
    CHECK(is_zero(c5.basis_discrepancy));

    CHECK(strong_eutaxy_check(root_lattice_a(3)).verdict);
    CHECK_THROWS_AS(strong_eutaxy_check(Lattice(QMatrix(0, 2))), InvalidInput);
}

TEST_CASE("strong eutaxy uses the rank, not the ambient dimension") {
    // A_2 sits in R^3; with the ambient dimension the constant would be 6·2/3 = 4.
    auto c = strong_eutaxy_check(root_lattice_a(3));
    CHECK(c.rank == 2);
    CHECK(c.constant == 6);
}

TEST_CASE("equivalence with the classification predicate, n <= 16") {
    for (const auto& g : groups_up_to_order(16)) {
        if (g.order() < 2) continue;
        CAPTURE(g.name());
        auto lg = build_lg(g);
        auto s = shortest_vectors(lg.lattice);
        auto cert = strong_eutaxy_check(lg.lattice, s);
        CHECK(cert.verdict == predicted_strongly_eutactic(g));
        CHECK(cert.verdict == form_identity(lg.lattice, s));
    }
}

TEST_CASE("odd n: second moment against the f basis is n(n-3)") {
    for (long n : {5, 7, 9, 11, 13, 15}) {
        for (const auto& g : groups_of_order(static_cast<int>(n))) {
            CAPTURE(g.name());
            auto lg = build_lg(g);
            auto s = shortest_vectors(lg.lattice);
            CHECK(s.vectors.size() == static_cast<std::size_t>(n * (n - 1) * (n - 3) / 4));
            CHECK(testing::check_minimal_moment(lg, s.vectors, n * (n - 3)));
            CHECK_FALSE(testing::check_minimal_moment(lg, s.vectors, n * (n - 2)));
        }
    }
}

TEST_CASE("scaling invariance") {
    for (const char* s : {"5", "6", "2,2,2", "2,4"}) {
        auto l = build_lg(grp(s)).lattice;
        const bool base = strong_eutaxy_check(l).verdict;
        CHECK(strong_eutaxy_check(l.scaled(Rational(1, 3))).verdict == base);
        CHECK(strong_eutaxy_check(l.scaled(Rational(7, 2))).verdict == base);
    }
}

TEST_CASE("spherical 2-design examples") {
    CHECK(spherical_2_design_check({e(2, 0), e(2, 0, -1), e(2, 1), e(2, 1, -1)}, 1));
    CHECK_FALSE(spherical_2_design_check({e(2, 0), e(2, 0, -1)}, 1));
    CHECK_FALSE(spherical_2_design_check({e(2, 0), e(2, 1)}, 1));  // centroid nonzero
    CHECK_THROWS_AS(spherical_2_design_check({e(2, 0), QVector{2, 0}}, 1), InvalidInput);
    CHECK_THROWS_AS(spherical_2_design_check({e(2, 0), e(2, 0, -1)}, 0), InvalidInput);

    auto lg = build_lg(grp("7"));
    auto s = shortest_vectors(lg.lattice);
    CHECK(spherical_2_design_check(s.vectors, s.min_norm_sq, lg.lattice.basis()));
    auto l6 = build_lg(grp("6"));
    auto s6 = shortest_vectors(l6.lattice);
    CHECK_FALSE(spherical_2_design_check(s6.vectors, s6.min_norm_sq, l6.lattice.basis()));
    // Points outside the stated subspace are rejected.
    CHECK_THROWS_AS(spherical_2_design_check({e(3, 0), e(3, 0, -1)}, 1, root_lattice_a(3).basis()), InvalidInput);
}

TEST_CASE("UNT frame examples") {
    CHECK(unt_frame_check(std::vector<ScaledVector>{{QVector{1}, Rational(1, 2)}, {QVector{-1}, Rational(1, 2)}}, 1, 2));
    CHECK(unt_frame_check(std::vector<QVector>{QVector{Rational(1, 2)}, QVector{Rational(-1, 2)}, QVector{Rational(1, 2)},
                                               QVector{Rational(-1, 2)}},
                          1, 4));
    CHECK_FALSE(unt_frame_check(std::vector<QVector>{QVector{1}, QVector{-1}}, 1, 2));  // wrong norm
    CHECK_THROWS_AS(unt_frame_check(std::vector<QVector>{}, 1, 1), InvalidInput);
    CHECK_THROWS_AS(unt_frame_check(std::vector<QVector>{QVector{1}}, 2, 1), InvalidInput);

    auto frame_of = [](const LgLattice& lg) {
        auto s = shortest_vectors(lg.lattice);
        const std::size_t m = s.vectors.size(), r = lg.lattice.rank();
        std::vector<ScaledVector> sv;
        for (const auto& x : s.vectors)
            sv.push_back({x, Rational(static_cast<long>(r)) / (s.min_norm_sq * static_cast<long>(m))});
        return unt_frame_check(sv, r, m);
    };
    CHECK(frame_of(build_lg(grp("5"))));
    CHECK_FALSE(frame_of(build_lg(grp("2,4"))));
}

TEST_CASE("frame bridge agrees with strong eutaxy, n <= 16") {
    for (const auto& g : groups_up_to_order(16)) {
        if (g.order() < 2) continue;
        CAPTURE(g.name());
        auto lg = build_lg(g);
        auto s = shortest_vectors(lg.lattice);
        const std::size_t m = s.vectors.size(), r = lg.lattice.rank();
        std::vector<ScaledVector> sv;
        for (const auto& x : s.vectors)
            sv.push_back({x, Rational(static_cast<long>(r)) / (s.min_norm_sq * static_cast<long>(m))});
        const bool verdict = strong_eutaxy_check(lg.lattice, s).verdict;
        CHECK(unt_frame_check(sv, r, m) == verdict);
        CHECK(spherical_2_design_check(s.vectors, s.min_norm_sq, lg.lattice.basis()) == verdict);
    }
}

TEST_CASE("classification predicate") {
    CHECK(predicted_strongly_eutactic(grp("9")));
    CHECK(predicted_strongly_eutactic(grp("2,2,2,2")));
    CHECK_FALSE(predicted_strongly_eutactic(grp("2,6")));
    CHECK(predicted_strongly_eutactic(grp("2")));
    CHECK_THROWS_AS(predicted_strongly_eutactic(grp("1")), InvalidInput);
}

TEST_CASE("integrality obstruction") {
    CHECK(integrality_obstruction(6, 2) == Rational(24, 5));
    CHECK(integrality_obstruction(8, 4) == Rational(96, 7));
    CHECK(integrality_obstruction(9, 1) == 0);
    CHECK_FALSE(is_integer(integrality_obstruction(6, 2)));
    CHECK(is_integer(integrality_obstruction(8, 8)));
    CHECK_THROWS_AS(integrality_obstruction(6, 4), InvalidInput);
    for (long n = 4; n <= 16; n += 2)
        for (long k = 2; k < n; k *= 2)
            if (n % k == 0) CHECK_FALSE(is_integer(integrality_obstruction(n, k)));
}
