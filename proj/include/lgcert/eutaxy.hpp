#pragma once

#include <vector>

#include "lgcert/group.hpp"
#include "lgcert/lattice.hpp"

namespace lgcert {

/// Outcome of the strong-eutaxy test Σ_{x∈S} x xᵀ = (|Λ|²|S|/r)·P_span.
struct EutaxyCertificate {
    bool verdict = false;
    std::size_t rank = 0;          // r, the dimension used in the constant
    std::size_t count = 0;         // m = |S(Λ)|
    Rational min_norm_sq;          // |Λ|²
    Rational constant;             // |Λ|²·m / r
    QMatrix second_moment;         // Σ x xᵀ, ambient coordinates
    QMatrix target;                // constant · P_span
    QMatrix discrepancy;           // second_moment − target
    /// Σ_x (x,b_i)(x,b_j) − constant·(b_i,b_j) over basis pairs; zero iff verdict.
    QMatrix basis_discrepancy;
};

/// Uses the lattice rank (not the ambient dimension) in the constant.
/// Throws InvalidInput for rank 0.
EutaxyCertificate strong_eutaxy_check(const Lattice& l);
/// Same, reusing an already computed minimal vector set.
EutaxyCertificate strong_eutaxy_check(const Lattice& l, const MinimalVectorSet& s);

/// Σ_{x∈S} x xᵀ.
QMatrix second_moment(const std::vector<QVector>& vectors, std::size_t dim);

/// Points y_i of common squared norm `norm_sq` inside the subspace spanned by
/// the rows of `subspace` (r = its rank) form a spherical 2-design after
/// normalization iff Σ y_i = 0 and Σ y_i y_iᵀ = (m·norm_sq/r)·P_span.
/// Throws InvalidInput on mixed norms, norm_sq <= 0, or points outside the subspace.
bool spherical_2_design_check(const std::vector<QVector>& points, const Rational& norm_sq, const QMatrix& subspace);
/// Subspace = all of R^dim.
bool spherical_2_design_check(const std::vector<QVector>& points, const Rational& norm_sq);

/// √scale_sq · direction, so frames of irrational vectors stay exact.
struct ScaledVector {
    QVector direction;
    Rational scale_sq = 1;
};

/// UNT (m, r)-frame test: m·‖x_i‖² = r for every vector, the vectors span an
/// r-dimensional space, and Σ x_i x_iᵀ = P_span. Throws InvalidInput on an
/// empty list or m < r.
bool unt_frame_check(const std::vector<ScaledVector>& vectors, std::size_t r, std::size_t m);
bool unt_frame_check(const std::vector<QVector>& vectors, std::size_t r, std::size_t m);

/// n odd, or every invariant factor equal to 2.
bool predicted_strongly_eutactic(const AbelianGroup& g);

/// 4n(κ−1)/(n−1).
Rational integrality_obstruction(long n, long kappa);
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace lgcert
