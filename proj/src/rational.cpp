#include "lgcert/rational.hpp"

#include <cctype>

#include "lgcert/errors.hpp"

namespace lgcert {

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
    auto valid_int = [](const std::string& s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw InvalidInput("malformed rational '" + text + "'");
    Integer d(den);
    if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
    Rational q(Integer(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
    return q;
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw InvalidInput("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational norm_sq(const QVector& a) { return dot(a, a); }

QVector operator+(const QVector& a, const QVector& b) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVector operator-(const QVector& a, const QVector& b) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVector operator-(const QVector& a) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

QVector operator*(const Rational& c, const QVector& a) {
    QVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

QVector to_rational(const ZVector& v) {
    QVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

bool is_zero(const QVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Integer floor(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer round_nearest(const Rational& q) { return floor(q + Rational(1, 2)); }

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

Rational fraction(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidInput("fraction: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix product: dimension mismatch");
    QMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    QMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    QMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
    QMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

QVector operator*(const QVector& v, const QMatrix& m) {
    if (v.size() != m.rows()) throw InvalidInput("vector-matrix product: dimension mismatch");
    QVector r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
    }
    return r;
}

QMatrix to_rational(const ZMatrix& m) {
    QMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

bool is_symmetric(const QMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) return false;
    return true;
}

bool is_zero(const QMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

Rational max_abs(const QMatrix& m) {
    Rational best = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (abs(m(i, j)) > best) best = abs(m(i, j));
    return best;
}

Rational trace(const QMatrix& m) {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
    return t;
}

namespace {

// Forward elimination in place; returns rank, and the sign-adjusted product of
// pivots through `det` when the matrix is square.
std::size_t eliminate(QMatrix& m, Rational* det) {
    std::size_t r = 0;
    Rational d = 1;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) {
            d = 0;
            continue;
        }
        if (p != r) {
            m.swap_rows(p, r);
            d = -d;
        }
        d *= m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    if (det) *det = (r == m.rows() && m.rows() == m.cols()) ? d : Rational(0);
    return r;
}

} // namespace

Rational determinant(QMatrix m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    Rational d;
    eliminate(m, &d);
    return d;
}

std::size_t rank(QMatrix m) { return eliminate(m, nullptr); }

QMatrix inverse(const QMatrix& m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw InvalidInput("inverse of a non-square matrix");
    QMatrix a = m;
    QMatrix inv = QMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw InvalidInput("inverse of a singular matrix");
        a.swap_rows(p, c);
        inv.swap_rows(p, c);
        const Rational piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

bool solve_left(const QMatrix& a, const QVector& b, QVector& x) {
    // x·A = b  <=>  Aᵀ xᵀ = bᵀ; eliminate on the augmented transpose.
    const std::size_t r = a.rows(), n = a.cols();
    if (b.size() != n) throw InvalidInput("solve_left: dimension mismatch");
    QMatrix aug(n, r + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < r; ++j) aug(i, j) = a(j, i);
        aug(i, r) = b[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < r && row < n; ++c) {
        std::size_t p = row;
        while (p < n && aug(p, c) == 0) ++p;
        if (p == n) continue;
        aug.swap_rows(p, row);
        const Rational piv = aug(row, c);
        for (std::size_t j = c; j <= r; ++j) aug(row, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug(i, c) == 0) continue;
            const Rational f = aug(i, c);
            for (std::size_t j = c; j <= r; ++j) aug(i, j) -= f * aug(row, j);
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (aug(i, r) != 0) return false;
    x.assign(r, Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = aug(i, r);
    return true;
}

} // namespace lgcert
