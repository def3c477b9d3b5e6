#pragma once

// Direct evaluations of the pair-sum identities used in the odd-order
// strong-eutaxy argument. Everything is computed from raw index sets, not
// through the lattice, so these act as independent checks.

#include <string>
#include <vector>

#include "lgcert/lg_lattice.hpp"

namespace lgcert::testing {

inline long entry(const ZMatrix& a, std::size_t row, std::size_t col) { return a(row, col).get_si(); }

// (f_j, f_k) = 1 + [j == k].
inline long f_dot(std::size_t j, std::size_t k) { return j == k ? 2 : 1; }

// Returns an empty string when identities (1)-(5) hold for every j, k, else a
// description of the first failure. Identity (5) is checked in the form that
// sums over every half t of z (|{t : 2g_t = z}| may be 0 or > 1 for even n).
inline std::string check_pair_identities(const LgLattice& lg) {
    const std::size_t n = lg.size();
    const ZMatrix a = f_basis_matrix(n);
    const auto classes = pair_classes(lg);
    for (std::size_t j = 0; j < n - 1; ++j) {
        for (std::size_t k = 0; k < n - 1; ++k) {
            long col = 0;
            for (std::size_t r = 0; r < n; ++r) col += entry(a, r, j);
            if (col != 0) return "(1) column sum";

            long id3 = 0, id5 = 0;
            for (const auto& pc : classes) {
                long id2 = 0, sa = 0, sc = 0;
                for (auto [x, y] : pc.ordered) {
                    id2 += entry(a, x, j) * entry(a, x, k);
                    id3 += entry(a, x, j) * entry(a, y, k);
                    sa += entry(a, x, j);
                    sc += entry(a, x, k);
                }
                if (id2 != f_dot(j, k)) return "(2) at z = " + std::to_string(lg.group.index_of(pc.z));
                if (sa * sc != 0) return "(4) at z = " + std::to_string(lg.group.index_of(pc.z));
                for (auto t : pc.halves) id5 += static_cast<long>(pc.ordered.size()) * entry(a, t, j) * entry(a, t, k);
            }
            if (id3 != 0) return "(3)";
            if (id5 != static_cast<long>(n) * f_dot(j, k)) return "(5)";
        }
    }
    return {};
}

inline long f_jk(const ZMatrix& a, std::size_t j, std::size_t k, std::size_t p, std::size_t q, std::size_t r,
                 std::size_t s) {
    const long x = entry(a, p, j) + entry(a, q, j) - entry(a, r, j) - entry(a, s, j);
    const long y = entry(a, p, k) + entry(a, q, k) - entry(a, r, k) - entry(a, s, k);
    return x * y;
}

// Σ_z Σ_{R_z} Σ_{R_z} f_{j,k} == 4n(n−3)(f_j, f_k) for all j, k.
inline bool check_total_sum(const LgLattice& lg) {
    const std::size_t n = lg.size();
    const ZMatrix a = f_basis_matrix(n);
    const auto classes = pair_classes(lg);
    for (std::size_t j = 0; j < n - 1; ++j)
        for (std::size_t k = 0; k < n - 1; ++k) {
            long total = 0;
            for (const auto& pc : classes)
                for (auto [p, q] : pc.distinct)
                    for (auto [r, s] : pc.distinct) total += f_jk(a, j, k, p, q, r, s);
            if (total != 4 * static_cast<long>(n) * (static_cast<long>(n) - 3) * f_dot(j, k)) return false;
        }
    return true;
}

// Σ_{u ∈ S} (u, f_j)(u, f_k) == c·(f_j, f_k) for all j, k.
inline bool check_minimal_moment(const LgLattice& lg, const std::vector<QVector>& minimal, const Rational& c) {
    const std::size_t n = lg.size();
    for (std::size_t j = 0; j < n - 1; ++j)
        for (std::size_t k = 0; k < n - 1; ++k) {
            Rational sum = 0;
            for (const auto& u : minimal) sum += (u[0] - u[j + 1]) * (u[0] - u[k + 1]);
            if (sum != c * f_dot(j, k)) return false;
        }
    return true;
}

} // namespace lgcert::testing
