#include "lgcert/dual.hpp"

#include <algorithm>
#include <set>

#include "lgcert/errors.hpp"
#include "lgcert/lg_lattice.hpp"

namespace lgcert {

Lattice root_dual_a(std::size_t n) {
    if (n < 2) throw InvalidInput("root_dual_a needs n >= 2");
    return dual(root_lattice_a(n));
}

namespace {

QVector character_vector(const Character& phi, const AbelianGroup& g) {
    QVector v;
    v.reserve(g.order());
    for (const auto& x : g.elements()) v.push_back(evaluate(phi, x));
    return v;
}

} // namespace

DualCosetFamily dual_cosets(const AbelianGroup& g) {
    if (g.order() < 2) throw InvalidInput("dual_cosets needs |G| >= 2");
    const std::size_t n = g.order();
    const Lattice a_dual = root_dual_a(n);
    const Lattice lg_dual = dual(build_lg(g).lattice);

    const Rational index_sq = determinant(a_dual.gram()) / determinant(lg_dual.gram());
    if (index_sq != Rational(static_cast<long>(n * n))) throw Error("dual cosets: [L_G^# : A^#] is not |G|");

    DualCosetFamily fam{g, dual_characters(g), {}, {}};
    for (const auto& phi : fam.characters) {
        QVector rep = project_sum_zero(character_vector(phi, g));
        if (!lg_dual.contains(rep)) throw Error("dual cosets: representative outside L_G^#");
        fam.min_norms_sq.push_back(coset_min_norm_sq(a_dual, rep));
        fam.representatives.push_back(std::move(rep));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (a_dual.contains(fam.representatives[i] - fam.representatives[j]))
                throw Error("dual cosets: two characters give the same coset");
    return fam;
}

bool dual_min_equal(const DualCosetFamily& fam) {
    const std::size_t n = fam.group.order();
    if (n < 3) throw InvalidInput("dual_min_equal needs |G| >= 3");
    const Rational root_min = fraction(static_cast<long>(n - 1), static_cast<long>(n));
    bool equal = true;
    for (std::size_t i = 0; i < fam.characters.size(); ++i)
        if (!is_zero(fam.characters[i]) && fam.min_norms_sq[i] <= root_min) equal = false;

    if (n <= 10) {
        const auto lhs = shortest_vectors(dual(build_lg(fam.group).lattice));
        const auto rhs = shortest_vectors(root_dual_a(n));
        const bool direct = lhs.min_norm_sq == rhs.min_norm_sq && lhs.vectors == rhs.vectors;
        if (direct != equal) throw Error("dual_min_equal: coset criterion disagrees with direct enumeration");
    }
    return equal;
}

bool dual_min_equal(const AbelianGroup& g) {
    if (g.order() < 3) throw InvalidInput("dual_min_equal needs |G| >= 3");
    return dual_min_equal(dual_cosets(g));
}

std::vector<std::size_t> cyclic_rearrangement(const Character& phi, const AbelianGroup& g) {
    const std::size_t n = g.order();
    const QVector values = character_vector(phi, g);
    const long k = character_order(phi);
    std::vector<std::size_t> sigma(n);
    std::vector<char> used(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational target = frac(fraction(static_cast<long>(i), k));
        std::size_t j = 0;
        while (j < n && (used[j] || values[j] != target)) ++j;
        if (j == n) throw Error("cyclic_rearrangement: value multiset does not match the cyclic pattern");
        used[j] = 1;
        sigma[i] = j;
    }
    return sigma;
}

} // namespace lgcert
