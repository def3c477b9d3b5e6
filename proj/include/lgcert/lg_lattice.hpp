#pragma once

#include <optional>
#include <vector>

#include "lgcert/group.hpp"
#include "lgcert/lattice.hpp"

namespace lgcert {

/// The lattice L_G = {x ∈ A_{n-1} : Σ x_j g_j = 0 in G}, with coordinate j
/// of R^n attached to the group element ordering[j].
struct LgLattice {
    AbelianGroup group;
    std::vector<GroupElement> ordering;  // ordering[0] is the identity
    Lattice lattice;

    std::size_t size() const { return ordering.size(); }
    /// Coordinate attached to g.
    std::size_t position(const GroupElement& g) const;
};

/// Builds L_G from the integer kernel of one equation over Z (coordinate sum)
/// and one congruence per invariant factor. Throws InvalidInput for |G| < 2.
LgLattice build_lg(const AbelianGroup& g);
/// Same with a caller-chosen element order; ordering must list every element
/// once with the identity first.
LgLattice build_lg(const AbelianGroup& g, std::vector<GroupElement> ordering);

/// [A_{n-1} : L_G], from the ratio of Gram determinants.
Integer index_in_root(const LgLattice& lg);

/// p + q − r − s with {p, q} ≠ {r, s}, p ≠ q, r ≠ s and p + q = r + s.
struct MinimalQuadruple {
    GroupElement p, q, r, s;
    ZVector vector;  // e_p + e_q − e_r − e_s
};

/// Every quadruple, iterating z over G, unordered pairs with sum z, then
/// ordered pairs of distinct pairs (so x and −x both appear).
/// Throws Unsupported for |G| < 4.
std::vector<MinimalQuadruple> minimal_quadruples(const LgLattice& lg);

/// The vectors of minimal_quadruples as a MinimalVectorSet (squared norm 4).
MinimalVectorSet structural_minimal_vectors(const LgLattice& lg);

/// Number of minimal vectors of L_G for |G| = n >= 4 with κ = |G_2|:
/// (n/κ)(n−κ)(n−κ−2)/4 + (n − n/κ)·n(n−2)/4, cross-checked against the
/// simplified n((n−1)(n−3)+κ−1)/4. Throws InvalidInput unless κ | n and n >= 4.
Integer minimal_count_formula(long n, long kappa);
/// The simplified closed form on its own.
Integer minimal_count_simplified(long n, long kappa);

/// True minimal squared norm of L_G by generic enumeration.
Rational min_norm_claim_check(const LgLattice& lg);

/// n × (n−1) matrix whose j-th column is f_j = e_1 − e_{j+1}.
ZMatrix f_basis_matrix(std::size_t n);

/// Solutions of g_a + g_b = z, in coordinate positions.
struct PairClass {
    GroupElement z;
    std::vector<std::pair<std::size_t, std::size_t>> ordered;    // S_z: all (a, b)
    std::vector<std::pair<std::size_t, std::size_t>> distinct;   // R_z: a != b
    std::vector<std::size_t> halves;                             // all t with 2 g_t = z
};

/// One PairClass per z ∈ G, in element order.
std::vector<PairClass> pair_classes(const LgLattice& lg);

} // namespace lgcert
