#include "lgcert/eutaxy.hpp"

#include <algorithm>

#include "lgcert/errors.hpp"

namespace lgcert {

QMatrix second_moment(const std::vector<QVector>& vectors, std::size_t dim) {
    QMatrix m(dim, dim);
    for (const auto& x : vectors) {
        if (x.size() != dim) throw InvalidInput("second_moment: dimension mismatch");
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = i; j < dim; ++j) m(i, j) += x[i] * x[j];
        }
    }
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
    return m;
}

EutaxyCertificate strong_eutaxy_check(const Lattice& l) {
    if (l.rank() == 0) throw InvalidInput("strong_eutaxy_check: lattice has rank 0");
    return strong_eutaxy_check(l, shortest_vectors(l));
}

EutaxyCertificate strong_eutaxy_check(const Lattice& l, const MinimalVectorSet& s) {
    if (l.rank() == 0) throw InvalidInput("strong_eutaxy_check: lattice has rank 0");
    EutaxyCertificate c;
    c.rank = l.rank();
    c.count = s.vectors.size();
    c.min_norm_sq = s.min_norm_sq;
    c.constant = s.min_norm_sq * static_cast<long>(c.count) / static_cast<long>(c.rank);
    c.second_moment = second_moment(s.vectors, l.ambient_dim());
    c.target = c.constant * span_projector(l);
    c.discrepancy = c.second_moment - c.target;
    c.basis_discrepancy = l.basis() * c.second_moment * l.basis().transpose() - c.constant * l.gram();
    c.verdict = is_zero(c.discrepancy);
    if (c.verdict != is_zero(c.basis_discrepancy)) throw Error("strong eutaxy: ambient and basis forms disagree");
    return c;
}

namespace {

void check_common_norm(const std::vector<QVector>& points, const Rational& norm_sq) {
    if (norm_sq <= 0) throw InvalidInput("design check: squared norm must be positive");
    for (const auto& y : points)
        if (norm_sq != lgcert::norm_sq(y)) throw InvalidInput("design check: points have mixed norms");
}

} // namespace

bool spherical_2_design_check(const std::vector<QVector>& points, const Rational& norm_sq, const QMatrix& subspace) {
    if (points.empty()) throw InvalidInput("design check: empty point set");
    check_common_norm(points, norm_sq);
    const std::size_t dim = subspace.cols();
    // Reduce the spanning rows to a basis of the subspace.
    std::vector<QVector> basis_rows;
    for (std::size_t i = 0; i < subspace.rows(); ++i) {
        QMatrix trial(basis_rows.size() + 1, dim);
        for (std::size_t k = 0; k < basis_rows.size(); ++k) trial.set_row(k, basis_rows[k]);
        trial.set_row(basis_rows.size(), subspace.row(i));
        if (rank(trial) == basis_rows.size() + 1) basis_rows.push_back(subspace.row(i));
    }
    if (basis_rows.empty()) throw InvalidInput("design check: zero-dimensional subspace");
    const Lattice span(QMatrix::from_rows(basis_rows, dim));
    for (const auto& y : points)
        if (!span.in_span(y)) throw InvalidInput("design check: point outside the subspace");

    QVector centroid(dim);
    for (const auto& y : points) centroid = centroid + y;
    if (!is_zero(centroid)) return false;
    const long r = static_cast<long>(span.rank());
    const Rational c = norm_sq * static_cast<long>(points.size()) / r;
    return second_moment(points, dim) == c * span_projector(span);
}

bool spherical_2_design_check(const std::vector<QVector>& points, const Rational& norm_sq) {
    if (points.empty()) throw InvalidInput("design check: empty point set");
    return spherical_2_design_check(points, norm_sq, QMatrix::identity(points.front().size()));
}

bool unt_frame_check(const std::vector<ScaledVector>& vectors, std::size_t r, std::size_t m) {
    if (vectors.empty()) throw InvalidInput("unt_frame_check: empty vector list");
    if (r < 1 || m < r) throw InvalidInput("unt_frame_check: need m >= r >= 1");
    const std::size_t dim = vectors.front().direction.size();
    for (const auto& v : vectors) {
        if (v.direction.size() != dim) throw InvalidInput("unt_frame_check: dimension mismatch");
        if (v.scale_sq * norm_sq(v.direction) * static_cast<long>(m) != static_cast<long>(r)) return false;
    }
    if (vectors.size() != m) return false;
    // Span: pick an independent subset of the directions.
    std::vector<QVector> basis_rows;
    for (const auto& v : vectors) {
        QMatrix trial(basis_rows.size() + 1, dim);
        for (std::size_t k = 0; k < basis_rows.size(); ++k) trial.set_row(k, basis_rows[k]);
        trial.set_row(basis_rows.size(), v.direction);
        if (rank(trial) == basis_rows.size() + 1) basis_rows.push_back(v.direction);
        // Any further direction outside this span makes the frame sum differ from P_span.
        if (basis_rows.size() == r) break;
    }
    if (basis_rows.size() != r) return false;
    const Lattice span(QMatrix::from_rows(basis_rows, dim));
    QMatrix frame(dim, dim);
    for (const auto& v : vectors) {
        const auto& x = v.direction;
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) frame(i, j) += v.scale_sq * x[i] * x[j];
        }
    }
    return frame == span_projector(span);
}

bool unt_frame_check(const std::vector<QVector>& vectors, std::size_t r, std::size_t m) {
    std::vector<ScaledVector> sv;
    sv.reserve(vectors.size());
    for (const auto& v : vectors) sv.push_back({v, Rational(1)});
    return unt_frame_check(sv, r, m);
}

bool predicted_strongly_eutactic(const AbelianGroup& g) {
    if (g.order() < 2) throw InvalidInput("predicted_strongly_eutactic needs |G| >= 2");
    return g.order() % 2 == 1 || g.is_elementary_two_group();
}

Rational integrality_obstruction(long n, long kappa) {
    if (n < 4 || kappa < 1 || n % kappa != 0) throw InvalidInput("integrality_obstruction needs n >= 4 and kappa | n");
    return fraction(Integer(4) * n * (kappa - 1), Integer(n - 1));
}

} // namespace lgcert
