#pragma once

#include "lgcert/budget.hpp"
#include "lgcert/rational.hpp"

namespace lgcert {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    QVector solution;  // one value per column of A
    std::size_t pivots = 0;
};

/// maximize c·x subject to A x = b, x >= 0, in exact rationals.
/// Two-phase tableau simplex (largest-coefficient pricing, lexicographic ratio
/// test against cycling); redundant equality rows are
/// detected and dropped after phase one. Throws BudgetExceeded when the pivot
/// count or the deadline in `budget` is exhausted.
LpResult solve_lp(const QMatrix& a, const QVector& b, const QVector& c, const Budget& budget = {});

} // namespace lgcert
