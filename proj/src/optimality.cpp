#include "lgcert/optimality.hpp"

#include <algorithm>

#include "lgcert/errors.hpp"
#include "lgcert/simplex.hpp"

namespace lgcert {

std::string to_string(TriState t) {
    switch (t) {
    case TriState::True: return "true";
    case TriState::False: return "false";
    case TriState::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

// One member per ± pair: the vector that is lexicographically smaller than its negative.
std::vector<const LatticeVector*> pair_representatives(const std::vector<LatticeVector>& minimal) {
    std::vector<const LatticeVector*> reps;
    for (const auto& v : minimal)
        if (lex_less(v.ambient, -v.ambient)) reps.push_back(&v);
    return reps;
}

// Upper triangle of c cᵀ, row-major.
QVector flat_outer(const ZVector& c) {
    QVector f;
    f.reserve(c.size() * (c.size() + 1) / 2);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i; j < c.size(); ++j) f.emplace_back(c[i] * c[j]);
    return f;
}

} // namespace

PerfectionResult is_perfect(const Lattice& l) {
    if (l.rank() == 0) throw InvalidInput("is_perfect: lattice has rank 0");
    return is_perfect(l, shortest_lattice_vectors(l));
}

PerfectionResult is_perfect(const Lattice& l, const std::vector<LatticeVector>& minimal) {
    if (l.rank() == 0) throw InvalidInput("is_perfect: lattice has rank 0");
    const std::size_t r = l.rank();
    PerfectionResult res;
    res.target = r * (r + 1) / 2;
    auto reps = pair_representatives(minimal);
    QMatrix m(reps.size(), res.target);
    for (std::size_t i = 0; i < reps.size(); ++i) m.set_row(i, flat_outer(reps[i]->coeffs));
    res.rank = rank(std::move(m));
    res.perfect = res.rank == res.target;
    return res;
}

EutacticResult is_eutactic(const Lattice& l, const Budget& budget, const Rational& scale) {
    if (l.rank() == 0) throw InvalidInput("is_eutactic: lattice has rank 0");
    return is_eutactic(l, shortest_lattice_vectors(l), budget, scale);
}

EutacticResult is_eutactic(const Lattice& l, const std::vector<LatticeVector>& minimal, const Budget& budget,
                           const Rational& scale) {
    if (l.rank() == 0) throw InvalidInput("is_eutactic: lattice has rank 0");
    if (scale <= 0) throw InvalidInput("is_eutactic: target scale must be positive");
    const std::size_t r = l.rank();
    auto reps = pair_representatives(minimal);
    EutacticResult res;
    const std::size_t nvars = reps.size() + 1;
    if (nvars > budget.max_lp_variables()) {
        res.note = "eutaxy LP has " + std::to_string(nvars) + " variables, over the budget of " +
                   std::to_string(budget.max_lp_variables());
        return res;
    }

    // In basis coordinates x = c·B the identity reads Σ_pairs 2ρ c cᵀ = scale·G⁻¹.
    // Variables: t (column 0) and slacks s_p = ρ_p − t >= 0.
    const QMatrix ginv = inverse(l.gram());
    const std::size_t rows = r * (r + 1) / 2;
    QMatrix a(rows, nvars);
    QVector b(rows);
    for (std::size_t p = 0; p < reps.size(); ++p) {
        const QVector f = flat_outer(reps[p]->coeffs);
        for (std::size_t k = 0; k < rows; ++k) {
            a(k, p + 1) = 2 * f[k];
            a(k, 0) += 2 * f[k];
        }
    }
    std::size_t k = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i; j < r; ++j) b[k++] = scale * ginv(i, j);
    QVector cost(nvars);
    cost[0] = 1;

    LpResult lp;
    try {
        lp = solve_lp(a, b, cost, budget);
    } catch (const BudgetExceeded& e) {
        res.note = e.what();
        return res;
    }
    res.pivots = lp.pivots;
    if (lp.status == LpStatus::Unbounded) throw Error("eutaxy LP unbounded; the trace constraint bounds t");
    if (lp.status == LpStatus::Infeasible) {
        res.status = TriState::False;
        return res;
    }
    res.optimum = lp.objective;
    if (lp.objective <= 0) {
        res.status = TriState::False;
        return res;
    }
    res.status = TriState::True;
    for (std::size_t p = 0; p < reps.size(); ++p)
        res.weights.push_back({reps[p]->ambient, lp.solution[0] + lp.solution[p + 1]});
    std::sort(res.weights.begin(), res.weights.end(),
              [](const EutaxyWeight& x, const EutaxyWeight& y) { return lex_less(x.representative, y.representative); });
    if (!verify_eutaxy_weights(l, res.weights, scale)) throw Error("eutaxy LP weights failed exact re-verification");
    return res;
}

bool verify_eutaxy_weights(const Lattice& l, const std::vector<EutaxyWeight>& weights, const Rational& scale) {
    const std::size_t dim = l.ambient_dim();
    QMatrix sum(dim, dim);
    for (const auto& w : weights) {
        if (w.weight <= 0) return false;
        const auto& x = w.representative;
        for (std::size_t i = 0; i < dim; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) sum(i, j) += 2 * w.weight * x[i] * x[j];
        }
    }
    return sum == scale * span_projector(l);
}

OptimalityReport extremality_certificate(const Lattice& l, const Budget& budget) {
    if (l.rank() == 0) throw InvalidInput("extremality_certificate: lattice has rank 0");
    const auto minimal = shortest_lattice_vectors(l);
    OptimalityReport rep;
    rep.perfection = is_perfect(l, minimal);
    rep.eutaxy = is_eutactic(l, minimal, budget);
    if (rep.eutaxy.status != TriState::BudgetExceeded)
        rep.extreme = rep.perfection.perfect && rep.eutaxy.status == TriState::True;
    else if (!rep.perfection.perfect)
        rep.extreme = false;
    return rep;
}

} // namespace lgcert
