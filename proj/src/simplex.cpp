#include "lgcert/simplex.hpp"

#include <optional>

#include "lgcert/errors.hpp"

namespace lgcert {

namespace {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : t_(rows, cols + 1), basis_(rows), z_(cols + 1) {}

    std::size_t rows() const { return t_.rows(); }
    std::size_t cols() const { return t_.cols() - 1; }
    Rational& at(std::size_t i, std::size_t j) { return t_(i, j); }
    Rational& rhs(std::size_t i) { return t_(i, cols()); }
    std::vector<std::size_t>& basis() { return basis_; }

    /// z_j = c_j − c_B·column_j, objective value in z_[cols()] as −(c_B·rhs).
    void price(const QVector& cost) {
        for (std::size_t j = 0; j <= cols(); ++j) {
            Rational s = j < cols() ? cost[j] : Rational(0);
            for (std::size_t i = 0; i < rows(); ++i)
                if (cost[basis_[i]] != 0) s -= cost[basis_[i]] * t_(i, j);
            z_[j] = s;
        }
    }

    Rational objective() const { return -z_[cols()]; }

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = t_(r, c);
        for (std::size_t j = 0; j <= cols(); ++j) t_(r, j) /= p;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == r || t_(i, c) == 0) continue;
            const Rational f = t_(i, c);
            for (std::size_t j = 0; j <= cols(); ++j)
                if (t_(r, j) != 0) t_(i, j) -= f * t_(r, j);
        }
        if (z_[c] != 0) {
            const Rational f = z_[c];
            for (std::size_t j = 0; j <= cols(); ++j)
                if (t_(r, j) != 0) z_[j] -= f * t_(r, j);
        }
        basis_[r] = c;
    }

    /// Pivots over columns [0, allowed) until optimal. Returns false if unbounded.
    /// Largest reduced cost enters; ratio-test ties are broken by the
    /// lexicographic rule on the columns that started as the identity (the
    /// current B⁻¹), which rules out cycling.
    bool optimize(std::size_t allowed, const Budget& budget, std::size_t& pivots) {
        while (true) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < allowed; ++j)
                if (z_[j] > 0 && (!enter || z_[j] > z_[*enter])) enter = j;
            if (!enter) return true;
            const std::size_t c = *enter;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < rows(); ++i) {
                if (t_(i, c) <= 0) continue;
                const Rational ratio = t_(i, cols()) / t_(i, c);
                if (!leave || ratio < best || (ratio == best && lex_smaller(i, *leave, c))) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave) return false;
            pivot(*leave, c);
            if (++pivots > budget.max_pivots())
                throw BudgetExceeded("simplex pivot budget of " + std::to_string(budget.max_pivots()) + " exhausted");
            budget.check("exact simplex");
        }
    }

    void set_identity_columns(std::size_t first) { identity_first_ = first; }

    // Row a scaled by its entry in column c is lexicographically below row b's, on the identity block.
    bool lex_smaller(std::size_t a, std::size_t b, std::size_t c) const {
        for (std::size_t j = identity_first_; j < cols(); ++j) {
            const Rational x = t_(a, j) / t_(a, c), y = t_(b, j) / t_(b, c);
            if (x != y) return x < y;
        }
        return false;
    }

    void drop_row(std::size_t r) {
        Matrix<Rational> nt(rows() - 1, t_.cols());
        for (std::size_t i = 0, k = 0; i < rows(); ++i) {
            if (i == r) continue;
            for (std::size_t j = 0; j < t_.cols(); ++j) nt(k, j) = t_(i, j);
            ++k;
        }
        t_ = std::move(nt);
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

private:
    QMatrix t_;
    std::vector<std::size_t> basis_;
    QVector z_;
    std::size_t identity_first_ = 0;
};

} // namespace

LpResult solve_lp(const QMatrix& a, const QVector& b, const QVector& c, const Budget& budget) {
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m || c.size() != n) throw InvalidInput("solve_lp: dimension mismatch");

    // Phase one: artificials n..n+m-1 with cost −1.
    Tableau tab(m, n + m);
    tab.set_identity_columns(n);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
        tab.at(i, n + i) = 1;
        tab.rhs(i) = flip ? Rational(-b[i]) : b[i];
        tab.basis()[i] = n + i;
    }
    QVector phase1(n + m);
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
    tab.price(phase1);
    LpResult res;
    tab.optimize(n + m, budget, res.pivots);
    if (tab.objective() < 0) {
        res.status = LpStatus::Infeasible;
        return res;
    }

    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are linear combinations of the others.
    for (std::size_t i = 0; i < tab.rows();) {
        if (tab.basis()[i] < n) {
            ++i;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < n; ++j)
            if (tab.at(i, j) != 0) {
                col = j;
                break;
            }
        if (col) {
            tab.pivot(i, *col);
            ++i;
        } else {
            tab.drop_row(i);
        }
    }

    QVector phase2(n + m);
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    tab.price(phase2);
    if (!tab.optimize(n, budget, res.pivots)) {
        res.status = LpStatus::Unbounded;
        return res;
    }
    res.status = LpStatus::Optimal;
    res.solution.assign(n, Rational(0));
    for (std::size_t i = 0; i < tab.rows(); ++i)
        if (tab.basis()[i] < n) res.solution[tab.basis()[i]] = tab.rhs(i);
    res.objective = 0;
    for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.solution[j];
    return res;
}

} // namespace lgcert
