#pragma once

#include <vector>

#include "lgcert/group.hpp"
#include "lgcert/lattice.hpp"

namespace lgcert {

/// A_{n−1}^#, the projection of Z^n onto the sum-zero hyperplane.
Lattice root_dual_a(std::size_t n);

/// One coset of A_{n−1}^# in L_G^# per character φ ∈ G^*.
struct DualCosetFamily {
    AbelianGroup group;
    std::vector<Character> characters;      // dual_characters(group) order; [0] is the zero character
    std::vector<QVector> representatives;   // π(φ(g_1), …, φ(g_n)) with values in [0, 1) before projection
    std::vector<Rational> min_norms_sq;     // coset minima modulo A_{n−1}^#
};

/// Builds the family over the element order of g.elements(). Verifies that every
/// representative lies in L_G^#, that distinct characters give distinct cosets,
/// and that [L_G^# : A_{n−1}^#] = n. Throws InvalidInput for |G| < 2.
DualCosetFamily dual_cosets(const AbelianGroup& g);

/// S(L_G^#) = S(A_{n−1}^#), decided by: every nonzero coset minimum exceeds
/// (n−1)/n. For n <= 10 the verdict is also compared with direct enumeration
/// of both minimal vector sets (Error on disagreement). Requires |G| >= 3.
bool dual_min_equal(const AbelianGroup& g);
bool dual_min_equal(const DualCosetFamily& family);

/// Permutation σ of coordinates with φ(g_{σ(i)}) = i/k mod 1 for i = 0..n−1,
/// where k is the order of φ: the values of φ rearranged into those of a
/// character of order k on the cyclic group C_n. Returned as σ[i], verified.
std::vector<std::size_t> cyclic_rearrangement(const Character& phi, const AbelianGroup& g);

} // namespace lgcert
