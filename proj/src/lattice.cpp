#include "lgcert/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "lgcert/errors.hpp"

namespace lgcert {

Lattice::Lattice(QMatrix basis) : basis_(std::move(basis)) {
    gram_ = QMatrix(basis_.rows(), basis_.rows());
    for (std::size_t i = 0; i < basis_.rows(); ++i)
        for (std::size_t j = i; j < basis_.rows(); ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < basis_.cols(); ++k) s += basis_(i, k) * basis_(j, k);
            gram_(i, j) = s;
            gram_(j, i) = s;
        }
    if (determinant(gram_) == 0) throw InvalidInput("lattice basis rows are linearly dependent");
}

QVector Lattice::combine(const ZVector& coeffs) const {
    if (coeffs.size() != rank()) throw InvalidInput("combine: coefficient count != rank");
    QVector v(ambient_dim());
    for (std::size_t i = 0; i < rank(); ++i) {
        if (coeffs[i] == 0) continue;
        const Rational c(coeffs[i]);
        for (std::size_t j = 0; j < ambient_dim(); ++j) v[j] += c * basis_(i, j);
    }
    return v;
}

std::optional<QVector> Lattice::coordinates(const QVector& v) const {
    if (v.size() != ambient_dim()) throw InvalidInput("coordinates: dimension mismatch");
    QVector x;
    if (!solve_left(basis_, v, x)) return std::nullopt;
    return x;
}

bool Lattice::contains(const QVector& v) const {
    auto c = coordinates(v);
    if (!c) return false;
    return std::all_of(c->begin(), c->end(), [](const Rational& q) { return q.get_den() == 1; });
}

Lattice Lattice::scaled(const Rational& c) const {
    if (c == 0) throw InvalidInput("scaling a lattice by zero");
    return Lattice(c * basis_);
}

Lattice Lattice::with_basis_change(const ZMatrix& t) const {
    const QMatrix tq = to_rational(t);
    if (t.rows() != rank() || t.cols() != rank() || abs(determinant(tq)) != 1)
        throw InvalidInput("basis change must be a unimodular rank x rank matrix");
    return Lattice(tq * basis_);
}

QMatrix gram(const Lattice& l) { return l.gram(); }

Lattice dual(const Lattice& l) { return Lattice(inverse(l.gram()) * l.basis()); }

QMatrix span_projector(const Lattice& l) {
    return l.basis().transpose() * inverse(l.gram()) * l.basis();
}

QMatrix projection_form(int n) {
    if (n < 2) throw InvalidInput("projection_form requires n >= 2");
    QMatrix p(n, n);
    const Rational inv(1, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = (i == j ? Rational(1) : Rational(0)) - inv;
    return p;
}

QVector project_sum_zero(const QVector& x) {
    Rational mean = 0;
    for (const auto& v : x) mean += v;
    mean /= static_cast<long>(x.size());
    QVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - mean;
    return r;
}

// ---------------------------------------------------------------------------
// Hermite normal form and integer kernels

namespace {

void row_combine(ZMatrix& m, std::size_t r, std::size_t i, const Integer& s, const Integer& t, const Integer& u,
                 const Integer& v) {
    // (row_r, row_i) <- (s·row_r + t·row_i, u·row_r + v·row_i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Integer a = m(r, j), b = m(i, j);
        m(r, j) = s * a + t * b;
        m(i, j) = u * a + v * b;
    }
}

void row_axpy(ZMatrix& m, std::size_t dst, const Integer& q, std::size_t src) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

} // namespace

HermiteResult hermite_normal_form(const ZMatrix& input) {
    HermiteResult res{input, ZMatrix::identity(input.rows()), 0};
    ZMatrix& h = res.form;
    ZMatrix& u = res.transform;
    const std::size_t m = h.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
        for (std::size_t i = r + 1; i < m; ++i) {
            if (h(i, c) == 0) continue;
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, c).get_mpz_t(), h(i, c).get_mpz_t());
            const Integer a_g = h(r, c) / g, b_g = h(i, c) / g;
            row_combine(h, r, i, s, t, -b_g, a_g);
            row_combine(u, r, i, s, t, -b_g, a_g);
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) = -h(r, j);
            for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            if (q == 0) continue;
            row_axpy(h, i, q, r);
            row_axpy(u, i, q, r);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

Lattice integer_kernel(const ZMatrix& rows, const std::vector<Modulus>& moduli) {
    if (rows.rows() != moduli.size()) throw InvalidInput("integer_kernel: one modulus per row required");
    const std::size_t n = rows.cols();
    std::size_t slack = 0;
    for (const auto& m : moduli) {
        if (m && *m <= 0) throw InvalidInput("integer_kernel: moduli must be positive");
        if (m) ++slack;
    }
    // x ∈ Z^N with R x ≡ 0  <=>  (x, y) ∈ ker [R | D] for integer slack y.
    ZMatrix at(n + slack, rows.rows());
    for (std::size_t i = 0; i < rows.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) at(j, i) = rows(i, j);
    std::size_t s = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i)
        if (moduli[i]) at(n + s++, i) = *moduli[i];

    const HermiteResult h = hermite_normal_form(at);
    const std::size_t kdim = at.rows() - h.rank;
    // The slack part is determined by x, so projecting the kernel onto x is injective.
    ZMatrix gens(kdim, n);
    for (std::size_t i = 0; i < kdim; ++i)
        for (std::size_t j = 0; j < n; ++j) gens(i, j) = h.transform(h.rank + i, j);
    const HermiteResult canon = hermite_normal_form(gens);
    QMatrix basis(canon.rank, n);
    for (std::size_t i = 0; i < canon.rank; ++i)
        for (std::size_t j = 0; j < n; ++j) basis(i, j) = canon.form(i, j);

    // Recheck membership of every basis vector.
    for (std::size_t b = 0; b < canon.rank; ++b)
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            Integer dotv = 0;
            for (std::size_t j = 0; j < n; ++j) dotv += rows(i, j) * canon.form(b, j);
            const bool ok = moduli[i] ? mpz_divisible_p(dotv.get_mpz_t(), moduli[i]->get_mpz_t()) != 0 : dotv == 0;
            if (!ok) throw Error("integer_kernel: basis vector fails its constraint");
        }
    return Lattice(std::move(basis));
}

QMatrix hermite_basis(const Lattice& l) {
    Integer den = 1;
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.ambient_dim(); ++j) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), l.basis()(i, j).get_den_mpz_t());
    ZMatrix z(l.rank(), l.ambient_dim());
    for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.ambient_dim(); ++j) {
            Rational v = l.basis()(i, j) * den;
            z(i, j) = v.get_num();
        }
    const HermiteResult h = hermite_normal_form(z);
    QMatrix out(h.rank, l.ambient_dim());
    for (std::size_t i = 0; i < h.rank; ++i)
        for (std::size_t j = 0; j < l.ambient_dim(); ++j) {
            out(i, j) = Rational(h.form(i, j), den);
            out(i, j).canonicalize();
        }
    return out;
}

Lattice integer_lattice(std::size_t n) { return Lattice(QMatrix::identity(n)); }

Lattice root_lattice_a(std::size_t n) {
    if (n < 2) throw InvalidInput("A_{n-1} needs n >= 2");
    QMatrix b(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        b(i, i) = 1;
        b(i, i + 1) = -1;
    }
    return Lattice(std::move(b));
}

// ---------------------------------------------------------------------------
// LLL

ZMatrix lll_transform(const Lattice& l) {
    const std::size_t r = l.rank();
    ZMatrix t = ZMatrix::identity(r);
    if (r <= 1) return t;
    std::vector<QVector> b(r);
    for (std::size_t i = 0; i < r; ++i) b[i] = l.basis().row(i);
    QMatrix mu(r, r);
    std::vector<Rational> bs(r);
    const Rational delta(99, 100);

    auto gso_row = [&](std::size_t k) {
        for (std::size_t j = 0; j < k; ++j) {
            Rational s = dot(b[k], b[j]);
            for (std::size_t i = 0; i < j; ++i) s -= mu(j, i) * mu(k, i) * bs[i];
            mu(k, j) = s / bs[j];
        }
        Rational s = dot(b[k], b[k]);
        for (std::size_t j = 0; j < k; ++j) s -= mu(k, j) * mu(k, j) * bs[j];
        bs[k] = s;
    };
    auto reduce = [&](std::size_t k, std::size_t j) {
        if (abs(mu(k, j)) * 2 <= 1) return;
        const Integer q = round_nearest(mu(k, j));
        const Rational qr(q);
        for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= qr * b[j][c];
        for (std::size_t c = 0; c < r; ++c) t(k, c) -= q * t(j, c);
        mu(k, j) -= qr;
        for (std::size_t i = 0; i < j; ++i) mu(k, i) -= qr * mu(j, i);
    };

    gso_row(0);
    std::size_t k = 1, kmax = 0;
    while (k < r) {
        if (k > kmax) {
            kmax = k;
            gso_row(k);
        }
        reduce(k, k - 1);
        if (bs[k] < (delta - mu(k, k - 1) * mu(k, k - 1)) * bs[k - 1]) {
            std::swap(b[k], b[k - 1]);
            t.swap_rows(k, k - 1);
            for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu(k, j), mu(k - 1, j));
            const Rational m = mu(k, k - 1);
            const Rational bn = bs[k] + m * m * bs[k - 1];
            mu(k, k - 1) = m * bs[k - 1] / bn;
            bs[k] = bs[k - 1] * bs[k] / bn;
            bs[k - 1] = bn;
            for (std::size_t i = k + 1; i <= kmax; ++i) {
                const Rational tmp = mu(i, k);
                mu(i, k) = mu(i, k - 1) - m * tmp;
                mu(i, k - 1) = tmp + mu(k, k - 1) * mu(i, k);
            }
            k = std::max<std::size_t>(1, k - 1);
        } else {
            for (std::size_t j = k - 1; j-- > 0;) reduce(k, j);
            ++k;
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Fincke–Pohst enumeration

namespace {

/// Enumerates integer x with Q(x + u) <= bound, Q the Gram form of a reduced
/// basis written as Σ_i B_i (y_i + Σ_{j>i} μ_{ji} y_j)², y = x + u.
/// The bound may be lowered by the visitor during the search.
class Enumerator {
public:
    Enumerator(const Lattice& reduced, QVector offset) : r_(reduced.rank()), u_(std::move(offset)) {
        mu_ = QMatrix(r_, r_);
        bs_.resize(r_);
        const QMatrix& g = reduced.gram();
        for (std::size_t k = 0; k < r_; ++k) {
            for (std::size_t j = 0; j < k; ++j) {
                Rational s = g(k, j);
                for (std::size_t i = 0; i < j; ++i) s -= mu_(j, i) * mu_(k, i) * bs_[i];
                mu_(k, j) = s / bs_[j];
            }
            Rational s = g(k, k);
            for (std::size_t j = 0; j < k; ++j) s -= mu_(k, j) * mu_(k, j) * bs_[j];
            bs_[k] = s;
        }
        if (u_.empty()) u_.assign(r_, Rational(0));
        symmetric_ = std::all_of(u_.begin(), u_.end(), [](const Rational& q) { return q == 0; });
        x_.assign(r_, Integer(0));
        y_.assign(r_, Rational(0));
    }

    /// Visitor receives (x, exact Q(x+u)) and may lower `bound`.
    template <typename Visit>
    void run(Rational& bound, Visit&& visit) {
        if (r_ == 0) return;
        recurse(r_ - 1, Rational(0), bound, true, visit);
    }

    /// Babai nearest-plane point: an upper bound for the coset minimum.
    Rational babai_norm() {
        Rational partial = 0;
        for (std::size_t lvl = r_; lvl-- > 0;) {
            const Rational c = center(lvl);
            x_[lvl] = round_nearest(c);
            y_[lvl] = Rational(x_[lvl]) + u_[lvl];
            const Rational d = Rational(x_[lvl]) - c;
            partial += bs_[lvl] * d * d;
        }
        return partial;
    }

    bool symmetric() const { return symmetric_; }

private:
    Rational center(std::size_t lvl) const {
        Rational s = -u_[lvl];
        for (std::size_t j = lvl + 1; j < r_; ++j) s -= mu_(j, lvl) * y_[j];
        return s;
    }

    template <typename Visit>
    void recurse(std::size_t lvl, const Rational& partial, Rational& bound, bool upper_zero, Visit& visit) {
        const Rational c = center(lvl);
        auto fits = [&](const Integer& x) {
            const Rational d = Rational(x) - c;
            return partial + bs_[lvl] * d * d <= bound;
        };
        const Rational rem = bound - partial;
        if (rem < 0) return;
        const double cd = c.get_d();
        const double rd = std::sqrt(std::max(0.0, Rational(rem / bs_[lvl]).get_d()));
        const Integer fc = floor(c);
        Integer lo(std::floor(cd - rd)), hi(std::ceil(cd + rd));
        if (lo > fc) lo = fc;
        if (hi < fc + 1) hi = fc + 1;
        while (fits(lo)) --lo;
        while (fits(hi)) ++hi;
        // Points of the same ± pair: restrict the top nonzero coordinate to be positive.
        if (symmetric_ && upper_zero && lo < -1) lo = -1;

        for (Integer x = lo + 1; x < hi; ++x) {
            const Rational d = Rational(x) - c;
            const Rational p = partial + bs_[lvl] * d * d;
            if (p > bound) continue;
            x_[lvl] = x;
            y_[lvl] = Rational(x) + u_[lvl];
            const bool zero_here = upper_zero && x == 0;
            if (lvl == 0) {
                if (symmetric_ && zero_here) continue;
                visit(x_, p, bound);
            } else {
                recurse(lvl - 1, p, bound, zero_here, visit);
            }
        }
        x_[lvl] = 0;
        y_[lvl] = u_[lvl];
    }

    std::size_t r_;
    QMatrix mu_;
    std::vector<Rational> bs_;
    QVector u_;
    ZVector x_;
    QVector y_;
    bool symmetric_ = true;
};

struct Reduced {
    ZMatrix transform;  // reduced basis = transform · original basis
    Lattice lattice;
};

Reduced reduce_lattice(const Lattice& l) {
    ZMatrix t = lll_transform(l);
    return Reduced{t, Lattice(to_rational(t) * l.basis())};
}

ZVector to_original(const ZVector& x, const ZMatrix& t) {
    ZVector out(t.cols());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < t.cols(); ++j) out[j] += x[i] * t(i, j);
    }
    return out;
}

ZVector negated(const ZVector& v) {
    ZVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

void sort_lattice_vectors(std::vector<LatticeVector>& vs) {
    std::sort(vs.begin(), vs.end(), [](const LatticeVector& a, const LatticeVector& b) {
        if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
        return lex_less(a.ambient, b.ambient);
    });
}

} // namespace

std::vector<LatticeVector> vectors_up_to(const Lattice& l, const Rational& bound) {
    std::vector<LatticeVector> out;
    if (l.rank() == 0) return out;
    const Reduced red = reduce_lattice(l);
    Enumerator e(red.lattice, {});
    Rational b = bound;
    e.run(b, [&](const ZVector& x, const Rational& q, Rational&) {
        ZVector c = to_original(x, red.transform);
        QVector v = l.combine(c);
        out.push_back({negated(c), -v, q});
        out.push_back({std::move(c), std::move(v), q});
    });
    sort_lattice_vectors(out);
    return out;
}

std::vector<LatticeVector> shortest_lattice_vectors(const Lattice& l) {
    if (l.rank() == 0) throw InvalidInput("shortest_vectors: lattice has rank 0");
    const Reduced red = reduce_lattice(l);
    Rational best = red.lattice.gram()(0, 0);
    for (std::size_t i = 1; i < l.rank(); ++i) best = std::min(best, Rational(red.lattice.gram()(i, i)));
    std::vector<ZVector> found;
    Enumerator e(red.lattice, {});
    Rational bound = best;
    e.run(bound, [&](const ZVector& x, const Rational& q, Rational& b) {
        if (q < best) {
            best = q;
            b = q;
            found.clear();
        }
        if (q == best) found.push_back(x);
    });
    std::vector<LatticeVector> out;
    for (const auto& x : found) {
        ZVector c = to_original(x, red.transform);
        QVector v = l.combine(c);
        out.push_back({negated(c), -v, best});
        out.push_back({std::move(c), std::move(v), best});
    }
    sort_lattice_vectors(out);
    return out;
}

MinimalVectorSet shortest_vectors(const Lattice& l) {
    auto lv = shortest_lattice_vectors(l);
    MinimalVectorSet s;
    s.min_norm_sq = lv.front().norm_sq;
    for (auto& v : lv) s.vectors.push_back(std::move(v.ambient));
    return s;
}

Rational coset_min_norm_sq(const Lattice& l, const QVector& t) {
    if (t.size() != l.ambient_dim()) throw InvalidInput("coset_min_norm_sq: dimension mismatch");
    if (l.rank() == 0) {
        if (!is_zero(t)) throw InvalidInput("coset_min_norm_sq: target outside the span");
        return 0;
    }
    const Reduced red = reduce_lattice(l);
    auto u = red.lattice.coordinates(t);
    if (!u) throw InvalidInput("coset_min_norm_sq: target outside the span of the lattice");
    // Shift u into [0,1) coordinatewise; same coset.
    for (auto& q : *u) q = frac(q);
    if (is_zero(*u)) return 0;
    Enumerator e(red.lattice, *u);
    Rational best = e.babai_norm();
    Rational bound = best;
    e.run(bound, [&](const ZVector&, const Rational& q, Rational& b) {
        if (q < best) {
            best = q;
            b = q;
        }
    });
    return best;
}

bool lex_less(const QVector& a, const QVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_lex(std::vector<QVector>& vs) { std::sort(vs.begin(), vs.end(), lex_less); }

} // namespace lgcert
