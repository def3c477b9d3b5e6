#pragma once

#include <cstdint>
#include <vector>

#include "lgcert/budget.hpp"
#include "lgcert/group.hpp"
#include "lgcert/lattice.hpp"

namespace lgcert {

/// Statistics of one automorphism-group computation.
struct AutSearchStats {
    std::size_t search_vectors = 0;   // |V|, the vectors the group acts on
    Rational search_bound;            // V = {v ∈ L : ‖v‖² <= bound}
    std::vector<std::size_t> orbits;  // orbit length of each base vector, level 1 first
    std::size_t generators = 0;
    std::uint64_t nodes = 0;          // backtrack nodes visited
};

/// |Aut(L)|: orthogonal maps of span(L) preserving L.
///
/// Backtracks over images of a basis inside the finite set V of short vectors
/// (V contains a basis, so every automorphism permutes V and is determined by
/// the basis images), with Gram-compatibility and candidate-count pruning and
/// a stabilizer chain so the order is a product of orbit lengths. Every
/// generator found is verified to preserve the Gram matrix and to permute V.
///
/// Throws BudgetExceeded (carrying the order of the subgroup found so far as a
/// lower bound) when `budget` runs out.
Integer aut_order(const Lattice& l, const Budget& budget = {}, AutSearchStats* stats = nullptr);

/// 2·n·|Aut(G)|, the order of C_2 × (G ⋊ Aut(G)) acting on L_G.
Integer subgroup_order(const AbelianGroup& g, const Budget& budget = {});

struct AutReport {
    Integer aut_order;
    Integer subgroup_order;
    Rational ratio;
};

/// |Aut(L_G)| / (2·n·|Aut(G)|). Throws InvalidInput for |G| < 3 (the subgroup
/// does not act faithfully on L_{C_2}) and Error if the subgroup order does
/// not divide the automorphism group order.
AutReport aut_report(const AbelianGroup& g, const Budget& budget = {});
Rational aut_ratio(const AbelianGroup& g, const Budget& budget = {});

/// Ratio 1 versus the predicate n ∈ {3, 4, 6} or n >= 12.
struct AutTheoremCheck {
    bool ratio_is_one = false;
    bool predicted = false;
    bool agrees = false;
    Rational ratio;
};

AutTheoremCheck theorem_auto_check(const AbelianGroup& g, const Budget& budget = {});
bool predicted_ratio_one(int n);

} // namespace lgcert
