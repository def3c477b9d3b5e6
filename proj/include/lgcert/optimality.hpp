#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lgcert/budget.hpp"
#include "lgcert/lattice.hpp"

namespace lgcert {

/// Perfection test: rank of the outer products {x xᵀ : x ∈ S(Λ)} inside the
/// r(r+1)/2-dimensional space of symmetric forms on span(Λ).
struct PerfectionResult {
    bool perfect = false;
    std::size_t rank = 0;
    std::size_t target = 0;
};

PerfectionResult is_perfect(const Lattice& l);
PerfectionResult is_perfect(const Lattice& l, const std::vector<LatticeVector>& minimal);

enum class TriState { True, False, BudgetExceeded };
std::string to_string(TriState t);

/// A ± pair of minimal vectors (represented by its lexicographically smaller
/// member) and the weight carried by each of its two vectors.
struct EutaxyWeight {
    QVector representative;
    Rational weight;
};

/// Eutaxy: Σ_{x∈S} ρ_x x xᵀ = scale·P_span with ρ_x = ρ_{−x} > 0. Decided by
/// the exact LP  max t  s.t. ρ_x >= t and the matrix identity; eutactic iff t* > 0.
struct EutacticResult {
    TriState status = TriState::BudgetExceeded;
    std::optional<Rational> optimum;       // t*
    std::vector<EutaxyWeight> weights;     // sorted by representative; present iff status == True
    std::string note;                      // reason when the budget was exceeded
    std::size_t pivots = 0;                // simplex pivots used
};

EutacticResult is_eutactic(const Lattice& l, const Budget& budget = {}, const Rational& scale = 1);
EutacticResult is_eutactic(const Lattice& l, const std::vector<LatticeVector>& minimal, const Budget& budget = {},
                           const Rational& scale = 1);

/// Exact re-check Σ ρ x xᵀ over both members of every pair against scale·P_span.
bool verify_eutaxy_weights(const Lattice& l, const std::vector<EutaxyWeight>& weights, const Rational& scale = 1);

/// Voronoi: extreme = perfect ∧ eutactic. `extreme` is empty when the eutaxy
/// LP ran out of budget.
struct OptimalityReport {
    PerfectionResult perfection;
    EutacticResult eutaxy;
    std::optional<bool> extreme;
};

OptimalityReport extremality_certificate(const Lattice& l, const Budget& budget = {});

} // namespace lgcert
