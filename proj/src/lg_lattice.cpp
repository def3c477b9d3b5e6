#include "lgcert/lg_lattice.hpp"

#include <algorithm>
#include <set>

#include "lgcert/errors.hpp"

namespace lgcert {

std::size_t LgLattice::position(const GroupElement& g) const {
    auto it = std::find(ordering.begin(), ordering.end(), g);
    if (it == ordering.end()) throw InvalidInput("element not in the group");
    return static_cast<std::size_t>(it - ordering.begin());
}

LgLattice build_lg(const AbelianGroup& g) { return build_lg(g, g.elements()); }

LgLattice build_lg(const AbelianGroup& g, std::vector<GroupElement> ordering) {
    const std::size_t n = g.order();
    if (n < 2) throw InvalidInput("L_G needs |G| >= 2");
    if (ordering.size() != n || ordering.front() != g.zero())
        throw InvalidInput("ordering must list all elements with the identity first");
    {
        std::set<GroupElement> seen(ordering.begin(), ordering.end());
        if (seen.size() != n) throw InvalidInput("ordering repeats an element");
        for (const auto& x : ordering) g.index_of(x);
    }
    const auto& d = g.invariant_factors();
    ZMatrix rows(1 + d.size(), n);
    std::vector<Modulus> moduli{std::nullopt};
    for (std::size_t j = 0; j < n; ++j) rows(0, j) = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) rows(1 + i, j) = ordering[j].residues[i];
        moduli.emplace_back(Integer(d[i]));
    }
    Lattice l = integer_kernel(rows, moduli);
    if (l.rank() != n - 1) throw Error("L_G has unexpected rank");
    return LgLattice{g, std::move(ordering), std::move(l)};
}

Integer index_in_root(const LgLattice& lg) {
    const Rational ratio = determinant(lg.lattice.gram()) / determinant(root_lattice_a(lg.size()).gram());
    if (ratio.get_den() != 1 || !mpz_perfect_square_p(ratio.get_num_mpz_t()))
        throw Error("L_G is not a sublattice of A_{n-1}");
    return sqrt(ratio.get_num());
}

std::vector<PairClass> pair_classes(const LgLattice& lg) {
    const auto& g = lg.group;
    const std::size_t n = lg.size();
    std::vector<PairClass> out;
    out.reserve(n);
    for (const auto& z : g.elements()) {
        PairClass pc{z, {}, {}, {}};
        for (std::size_t a = 0; a < n; ++a) {
            const std::size_t b = lg.position(g.add(z, g.negate(lg.ordering[a])));
            pc.ordered.emplace_back(a, b);
            if (a != b)
                pc.distinct.emplace_back(a, b);
            else
                pc.halves.push_back(a);
        }
        out.push_back(std::move(pc));
    }
    return out;
}

std::vector<MinimalQuadruple> minimal_quadruples(const LgLattice& lg) {
    const std::size_t n = lg.size();
    if (n < 4) throw Unsupported("structural minimal vectors need |G| >= 4; use shortest_vectors for smaller orders");
    std::vector<MinimalQuadruple> out;
    for (const auto& pc : pair_classes(lg)) {
        std::vector<std::pair<std::size_t, std::size_t>> unordered;
        for (auto [a, b] : pc.distinct)
            if (a < b) unordered.emplace_back(a, b);
        for (const auto& [p, q] : unordered)
            for (const auto& [r, s] : unordered) {
                if (p == r && q == s) continue;
                MinimalQuadruple mq{lg.ordering[p], lg.ordering[q], lg.ordering[r], lg.ordering[s], ZVector(n)};
                mq.vector[p] += 1;
                mq.vector[q] += 1;
                mq.vector[r] -= 1;
                mq.vector[s] -= 1;
                out.push_back(std::move(mq));
            }
    }
    return out;
}

MinimalVectorSet structural_minimal_vectors(const LgLattice& lg) {
    MinimalVectorSet s;
    s.min_norm_sq = 4;
    for (const auto& mq : minimal_quadruples(lg)) s.vectors.push_back(to_rational(mq.vector));
    sort_lex(s.vectors);
    s.vectors.erase(std::unique(s.vectors.begin(), s.vectors.end()), s.vectors.end());
    return s;
}

namespace {

Integer exact_quotient(const Integer& num, long den, const char* what) {
    if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(den)))
        throw Error(std::string("minimal count formula: non-integral ") + what);
    return num / den;
}

void check_count_args(long n, long kappa) {
    if (n < 4) throw InvalidInput("minimal count formula needs n >= 4");
    if (kappa < 1 || n % kappa != 0) throw InvalidInput("minimal count formula needs kappa | n");
}

} // namespace

Integer minimal_count_simplified(long n, long kappa) {
    check_count_args(n, kappa);
    return exact_quotient(Integer(n) * ((n - 1) * (n - 3) + kappa - 1), 4, "simplified count");
}

Integer minimal_count_formula(long n, long kappa) {
    check_count_args(n, kappa);
    const long image = n / kappa;
    const Integer total = exact_quotient(Integer(image) * (n - kappa) * (n - kappa - 2) + Integer(n - image) * n * (n - 2),
                                         4, "count");
    if (total != minimal_count_simplified(n, kappa)) throw Error("minimal count formula disagrees with its simplified form");
    return total;
}

Rational min_norm_claim_check(const LgLattice& lg) { return shortest_vectors(lg.lattice).min_norm_sq; }

ZMatrix f_basis_matrix(std::size_t n) {
    ZMatrix a(n, n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        a(0, j) = 1;
        a(j + 1, j) = -1;
    }
    return a;
}

} // namespace lgcert
