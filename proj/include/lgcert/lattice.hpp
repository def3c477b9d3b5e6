#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lgcert/rational.hpp"

namespace lgcert {

/// Lattice given by linearly independent basis rows with exact rational
/// coordinates in an ambient space of dimension ambient_dim().
class Lattice {
public:
    Lattice() = default;
    /// Throws InvalidInput if the rows are linearly dependent.
    explicit Lattice(QMatrix basis);

    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t rank() const noexcept { return basis_.rows(); }
    const QMatrix& basis() const noexcept { return basis_; }
    const QMatrix& gram() const noexcept { return gram_; }

    /// Σ c_i b_i.
    QVector combine(const ZVector& coeffs) const;
    /// Coordinates of an ambient vector w.r.t. the basis; nullopt if outside the span.
    std::optional<QVector> coordinates(const QVector& v) const;
    bool in_span(const QVector& v) const { return coordinates(v).has_value(); }
    bool contains(const QVector& v) const;

    Lattice scaled(const Rational& c) const;
    /// New basis T·B for an integer matrix T; throws unless |det T| = 1.
    Lattice with_basis_change(const ZMatrix& t) const;

private:
    QMatrix basis_;
    QMatrix gram_;
};

QMatrix gram(const Lattice& l);

/// Dual lattice inside span(L): basis G⁻¹B, so that (dual basis)·Bᵀ = I.
Lattice dual(const Lattice& l);

/// Canonical basis: row Hermite normal form of the basis scaled to integers.
QMatrix hermite_basis(const Lattice& l);

/// Orthogonal projector onto span(L): Bᵀ G⁻¹ B.
QMatrix span_projector(const Lattice& l);

/// P = I − J/n, the projector onto the sum-zero hyperplane of R^n.
QMatrix projection_form(int n);
/// x ↦ x − ((x,1)/n)·1.
QVector project_sum_zero(const QVector& x);

/// Row Hermite normal form with unimodular transform: transform·input = form.
struct HermiteResult {
    ZMatrix form;
    ZMatrix transform;
    std::size_t rank = 0;
};
HermiteResult hermite_normal_form(const ZMatrix& m);

/// Modulus of one linear constraint: nullopt means "= 0 over Z".
using Modulus = std::optional<Integer>;

/// Basis of {x ∈ Z^N : rows_i·x ≡ 0 (mod moduli_i)}, in Hermite normal form.
Lattice integer_kernel(const ZMatrix& rows, const std::vector<Modulus>& moduli);

/// Z^n and the sum-zero lattice A_{n-1} (basis e_i − e_{i+1}).
Lattice integer_lattice(std::size_t n);
Lattice root_lattice_a(std::size_t n);

/// Exact LLL on the basis (δ = 99/100). Returns T with T·B reduced.
ZMatrix lll_transform(const Lattice& l);

/// A vector of the lattice with its coefficients in the lattice's own basis.
struct LatticeVector {
    ZVector coeffs;
    QVector ambient;
    Rational norm_sq;
};

/// Every nonzero lattice vector with squared norm <= bound (both x and −x).
/// Fincke–Pohst enumeration over an LLL-reduced basis with exact pruning.
std::vector<LatticeVector> vectors_up_to(const Lattice& l, const Rational& bound);

/// Full ±-symmetric set of minimal vectors and their common squared norm.
struct MinimalVectorSet {
    std::vector<QVector> vectors;  // sorted lexicographically
    Rational min_norm_sq;
};

/// Throws InvalidInput for rank 0.
MinimalVectorSet shortest_vectors(const Lattice& l);
/// Same, also returning coefficients in the lattice basis (parallel to vectors).
std::vector<LatticeVector> shortest_lattice_vectors(const Lattice& l);

/// min{‖v‖² : v ∈ t + L}. Throws InvalidInput if t is outside span(L).
Rational coset_min_norm_sq(const Lattice& l, const QVector& t);

/// Lexicographic comparison of exact vectors.
bool lex_less(const QVector& a, const QVector& b);
void sort_lex(std::vector<QVector>& vs);

} // namespace lgcert
