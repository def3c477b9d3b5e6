#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "lgcert/errors.hpp"
#include "lgcert/lattice.hpp"

using namespace lgcert;

namespace {

QMatrix qm(std::initializer_list<std::initializer_list<long>> rows) {
    QMatrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long v : r) m(i, j++) = v;
        ++i;
    }
    return m;
}

// All nonzero lattice vectors with coefficients in [-box, box]^r of minimal norm.
MinimalVectorSet brute_force_shortest(const Lattice& l, int box) {
    const std::size_t r = l.rank();
    ZVector c(r, Integer(-box));
    MinimalVectorSet best;
    bool have = false;
    while (true) {
        bool nonzero = std::any_of(c.begin(), c.end(), [](const Integer& z) { return z != 0; });
        if (nonzero) {
            QVector v = l.combine(c);
            Rational n = norm_sq(v);
            if (!have || n < best.min_norm_sq) {
                best.min_norm_sq = n;
                best.vectors.clear();
                have = true;
            }
            if (n == best.min_norm_sq) best.vectors.push_back(v);
        }
        std::size_t i = 0;
        while (i < r && c[i] == box) c[i++] = -box;
        if (i == r) break;
        ++c[i];
    }
    sort_lex(best.vectors);
    return best;
}

ZMatrix random_unimodular(std::size_t r, std::mt19937& rng) {
    ZMatrix t = ZMatrix::identity(r);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(r) - 1), coef(-2, 2);
    for (int step = 0; step < 12; ++step) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Integer q = coef(rng);
        for (std::size_t k = 0; k < r; ++k) t(i, k) += q * t(j, k);
    }
    return t;
}

std::set<std::vector<std::string>> as_set(const std::vector<QVector>& vs) {
    std::set<std::vector<std::string>> s;
    for (const auto& v : vs) {
        std::vector<std::string> t;
        for (const auto& q : v) t.push_back(q.get_str());
        s.insert(t);
    }
    return s;
}

std::vector<Lattice> sample_lattices() {
    return {
        integer_lattice(2),
        root_lattice_a(3),
        root_lattice_a(4),
        Lattice(qm({{2, -2}})),
        Lattice(qm({{1, 0, 0}, {1, 3, 0}, {2, 1, 5}})),
        Lattice(qm({{3, 1, 0, 0}, {1, 3, 1, 0}, {0, 1, 3, 1}, {0, 0, 1, 3}})),
        dual(root_lattice_a(3)),
        Lattice(QMatrix{{Rational(1, 2), Rational(1, 3)}, {Rational(0), Rational(5, 4)}}),
        root_lattice_a(5),
    };
}

} // namespace

TEST_CASE("gram matrices") {
    CHECK(gram(Lattice(qm({{1, -1}}))) == qm({{2}}));
    CHECK(gram(root_lattice_a(3)) == qm({{2, -1}, {-1, 2}}));
    CHECK(gram(Lattice(qm({{2, -2}}))) == qm({{8}}));
    CHECK_THROWS_AS(Lattice(qm({{1, 2}, {2, 4}})), InvalidInput);
}

TEST_CASE("dual lattices") {
    CHECK(hermite_basis(dual(integer_lattice(2))) == hermite_basis(integer_lattice(2)));
    auto d = dual(Lattice(qm({{2, 0}})));
    CHECK(d.basis() == QMatrix{{Rational(1, 2), Rational(0)}});
    CHECK(shortest_vectors(dual(root_lattice_a(3))).min_norm_sq == Rational(2, 3));

    for (const auto& l : sample_lattices()) {
        auto dl = dual(l);
        CHECK(dl.rank() == l.rank());
        CHECK(dl.basis() * l.basis().transpose() == QMatrix::identity(l.rank()));
        CHECK(determinant(dl.gram()) * determinant(l.gram()) == 1);
        CHECK(hermite_basis(dual(dl)) == hermite_basis(l));
        for (std::size_t i = 0; i < l.rank(); ++i) CHECK(l.in_span(dl.basis().row(i)));
    }
    // A_{n-1}^# has minimum (n-1)/n.
    for (int n = 2; n <= 8; ++n) CHECK(shortest_vectors(dual(root_lattice_a(n))).min_norm_sq == Rational(n - 1, n));
}

TEST_CASE("hermite normal form keeps a unimodular certificate") {
    ZMatrix m(3, 4);
    const long vals[3][4] = {{4, 6, 2, 0}, {2, 3, 7, 1}, {6, 9, 9, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = vals[i][j];
    auto h = hermite_normal_form(m);
    CHECK(h.rank == 2);
    CHECK(abs(determinant(to_rational(h.transform))) == 1);
    CHECK(to_rational(h.transform) * to_rational(m) == to_rational(h.form));
    for (std::size_t j = 0; j < 4; ++j) CHECK(h.form(2, j) == 0);
}

TEST_CASE("integer kernels") {
    ZMatrix ones(1, 4);
    for (int j = 0; j < 4; ++j) ones(0, j) = 1;
    auto a3 = integer_kernel(ones, {std::nullopt});
    CHECK(a3.rank() == 3);
    CHECK(hermite_basis(a3) == hermite_basis(root_lattice_a(4)));

    ZMatrix rows(2, 2);
    rows(0, 0) = 1;
    rows(0, 1) = 1;
    rows(1, 1) = 1;
    auto k = integer_kernel(rows, {std::nullopt, Integer(2)});
    REQUIRE(k.rank() == 1);
    CHECK(hermite_basis(k) == hermite_basis(Lattice(qm({{2, -2}}))));

    auto full = integer_kernel(ZMatrix(0, 3), {});
    CHECK(hermite_basis(full) == QMatrix::identity(3));

    CHECK_THROWS_AS(integer_kernel(ones, {}), InvalidInput);
    CHECK_THROWS_AS(integer_kernel(ones, {Integer(0)}), InvalidInput);

    // Contains a supplied witness: x = (3, -1, 5) with 2x_1 + x_2 + x_3 ≡ 0 (mod 5)... (6-1-5=0)
    ZMatrix w(1, 3);
    w(0, 0) = 2;
    w(0, 1) = 1;
    w(0, 2) = 1;
    auto kw = integer_kernel(w, {Integer(5)});
    CHECK(kw.rank() == 3);
    CHECK(kw.contains({Rational(3), Rational(-1), Rational(5)}));
    CHECK_FALSE(kw.contains({Rational(1), Rational(0), Rational(0)}));
    CHECK(abs(determinant(kw.gram())) == 25);
}

TEST_CASE("shortest vectors") {
    auto z2 = shortest_vectors(integer_lattice(2));
    CHECK(z2.min_norm_sq == 1);
    CHECK(z2.vectors.size() == 4);
    auto a2 = shortest_vectors(root_lattice_a(3));
    CHECK(a2.min_norm_sq == 2);
    CHECK(a2.vectors.size() == 6);
    CHECK_THROWS_AS(shortest_vectors(Lattice(QMatrix(0, 3))), InvalidInput);
}

TEST_CASE("Fincke-Pohst agrees with brute-force coefficient boxes") {
    for (const auto& l : sample_lattices()) {
        if (l.rank() > 4) continue;
        auto fp = shortest_vectors(l);
        auto bf = brute_force_shortest(l, 6);
        CHECK(fp.min_norm_sq == bf.min_norm_sq);
        CHECK(fp.vectors == bf.vectors);
        for (const auto& v : fp.vectors) {
            CHECK(norm_sq(v) == fp.min_norm_sq);
            CHECK(std::find(fp.vectors.begin(), fp.vectors.end(), -v) != fp.vectors.end());
        }
    }
}

TEST_CASE("shortest vectors are invariant under unimodular basis change") {
    std::mt19937 rng(7);
    for (const auto& l : sample_lattices()) {
        auto base = shortest_vectors(l);
        for (int trial = 0; trial < 3; ++trial) {
            auto l2 = l.with_basis_change(random_unimodular(l.rank(), rng));
            auto s2 = shortest_vectors(l2);
            CHECK(s2.min_norm_sq == base.min_norm_sq);
            CHECK(as_set(s2.vectors) == as_set(base.vectors));
        }
    }
}

TEST_CASE("vectors up to a bound") {
    auto vs = vectors_up_to(integer_lattice(2), 2);
    CHECK(vs.size() == 8);
    for (const auto& v : vs) CHECK(root_lattice_a(3).rank() == 2);
    auto a2 = vectors_up_to(root_lattice_a(3), 6);  // 6 of norm 2 and 6 of norm 6
    CHECK(a2.size() == 12);
    for (const auto& v : a2) CHECK(root_lattice_a(3).combine(v.coeffs) == v.ambient);
}

TEST_CASE("coset minima") {
    CHECK(coset_min_norm_sq(root_lattice_a(3), {Rational(1), Rational(0), Rational(-1)}) == 0);
    CHECK(coset_min_norm_sq(integer_lattice(1), {Rational(1, 2)}) == Rational(1, 4));
    CHECK(coset_min_norm_sq(integer_lattice(1), {Rational(7, 3)}) == Rational(1, 9));
    // Nontrivial class of A_2^# / A_2.
    QVector t = {Rational(2, 3), Rational(-1, 3), Rational(-1, 3)};
    CHECK(coset_min_norm_sq(root_lattice_a(3), t) == Rational(2, 3));
    CHECK_THROWS_AS(coset_min_norm_sq(root_lattice_a(3), {Rational(1), Rational(0), Rational(0)}), InvalidInput);
}

TEST_CASE("coset minimum never exceeds sampled coset members") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto& l : sample_lattices()) {
        QVector t(l.ambient_dim());
        for (std::size_t i = 0; i < l.rank(); ++i) t = t + Rational(static_cast<long>(i) + 1, 7) * l.basis().row(i);
        const Rational m = coset_min_norm_sq(l, t);
        CHECK(m > 0);
        for (int s = 0; s < 100; ++s) {
            ZVector c(l.rank());
            for (auto& z : c) z = coef(rng);
            CHECK(m <= norm_sq(t - l.combine(c)));
        }
    }
}

TEST_CASE("projection form") {
    CHECK(projection_form(2) == QMatrix{{Rational(1, 2), Rational(-1, 2)}, {Rational(-1, 2), Rational(1, 2)}});
    CHECK(trace(projection_form(3)) == 2);
    auto p5 = projection_form(5);
    QVector ones(5, Rational(1));
    CHECK(is_zero(ones * p5));
    CHECK(p5 * p5 == p5);
    CHECK(span_projector(root_lattice_a(5)) == p5);
    CHECK(project_sum_zero({Rational(0), Rational(1, 2)}) == QVector{Rational(-1, 4), Rational(1, 4)});
    CHECK_THROWS_AS(projection_form(1), InvalidInput);
}

TEST_CASE("LLL transform is unimodular and size-reduced") {
    std::mt19937 rng(3);
    for (const auto& l : sample_lattices()) {
        auto skewed = l.with_basis_change(random_unimodular(l.rank(), rng));
        auto t = lll_transform(skewed);
        CHECK(abs(determinant(to_rational(t))) == 1);
        auto red = skewed.with_basis_change(t);
        CHECK(hermite_basis(red) == hermite_basis(l));
    }
}
