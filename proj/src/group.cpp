#include "lgcert/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lgcert/errors.hpp"

namespace lgcert {

namespace {

std::vector<std::pair<long, int>> factorize(long n) {
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

AbelianGroup::AbelianGroup(std::vector<int> invariant_factors) : factors_(std::move(invariant_factors)) {
    order_ = 1;
    for (int d : factors_) order_ *= d;
    elements_.reserve(order_);
    GroupElement g{std::vector<int>(factors_.size(), 0)};
    for (int idx = 0; idx < order_; ++idx) {
        elements_.push_back(g);
        for (std::size_t i = factors_.size(); i-- > 0;) {
            if (++g.residues[i] < factors_[i]) break;
            g.residues[i] = 0;
        }
    }
}

AbelianGroup AbelianGroup::from_cyclic_factors(const std::vector<long>& factors) {
    long total = 1;
    // prime -> list of prime-power parts
    std::map<long, std::vector<long>> parts;
    for (long f : factors) {
        if (f <= 1) throw InvalidInput("cyclic factor must be >= 2, got " + std::to_string(f));
        total *= f;
        if (total > (1L << 24)) throw InvalidInput("group order too large");
        for (auto [p, e] : factorize(f)) parts[p].push_back(ipow(p, e));
    }
    std::size_t k = 0;
    for (auto& [p, v] : parts) {
        std::sort(v.begin(), v.end(), std::greater<>());
        k = std::max(k, v.size());
    }
    // d_k gets the largest power of every prime, d_{k-1} the next, ...
    std::vector<int> inv(k, 1);
    for (const auto& [p, v] : parts)
        for (std::size_t i = 0; i < v.size(); ++i) inv[k - 1 - i] *= static_cast<int>(v[i]);
    return AbelianGroup(std::move(inv));
}

AbelianGroup AbelianGroup::parse(const std::string& literal) {
    std::vector<long> factors;
    if (literal.empty()) throw InvalidInput("empty group literal");
    std::stringstream ss(literal);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit) || tok.size() > 9)
            throw InvalidInput("malformed group literal '" + literal + "'");
        factors.push_back(std::stol(tok));
    }
    if (!literal.empty() && literal.back() == ',')
        throw InvalidInput("malformed group literal '" + literal + "'");
    return from_cyclic_factors(factors);
}

std::size_t AbelianGroup::index_of(const GroupElement& g) const {
    if (g.residues.size() != factors_.size()) throw InvalidInput("element of a different group");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (g.residues[i] < 0 || g.residues[i] >= factors_[i]) throw InvalidInput("unreduced element");
        idx = idx * factors_[i] + g.residues[i];
    }
    return idx;
}

GroupElement AbelianGroup::zero() const { return GroupElement{std::vector<int>(factors_.size(), 0)}; }

GroupElement AbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
    GroupElement r = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) r.residues[i] = (a.residues[i] + b.residues[i]) % factors_[i];
    return r;
}

GroupElement AbelianGroup::negate(const GroupElement& a) const {
    GroupElement r = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) r.residues[i] = (factors_[i] - a.residues[i]) % factors_[i];
    return r;
}

GroupElement AbelianGroup::multiple(long k, const GroupElement& a) const {
    GroupElement r = a;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        long v = (k % factors_[i]) * a.residues[i] % factors_[i];
        if (v < 0) v += factors_[i];
        r.residues[i] = static_cast<int>(v);
    }
    return r;
}

GroupElement AbelianGroup::generator(std::size_t i) const {
    GroupElement g = zero();
    g.residues.at(i) = 1;
    return g;
}

int AbelianGroup::element_order(const GroupElement& g) const {
    GroupElement x = g;
    int k = 1;
    const GroupElement z = zero();
    while (x != z) {
        x = add(x, g);
        ++k;
    }
    return k;
}

bool AbelianGroup::is_elementary_two_group() const {
    return !factors_.empty() && std::all_of(factors_.begin(), factors_.end(), [](int d) { return d == 2; });
}

std::string AbelianGroup::name() const {
    if (factors_.empty()) return "C1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += "x";
        s += "C" + std::to_string(factors_[i]);
    }
    return s;
}

int two_torsion_order(const AbelianGroup& g) {
    int count = 0;
    const GroupElement z = g.zero();
    for (const auto& x : g.elements())
        if (g.add(x, x) == z) ++count;
    return count;
}

int doubling_image_size(const AbelianGroup& g) {
    std::set<GroupElement> image;
    for (const auto& x : g.elements()) image.insert(g.add(x, x));
    return static_cast<int>(image.size());
}

namespace {

// Image of an arbitrary element under the homomorphism fixed by generator images.
GroupElement apply_hom(const AbelianGroup& g, const std::vector<GroupElement>& images, const GroupElement& x) {
    GroupElement r = g.zero();
    for (std::size_t i = 0; i < images.size(); ++i) r = g.add(r, g.multiple(x.residues[i], images[i]));
    return r;
}

GroupAutomorphism from_images(const AbelianGroup& g, std::vector<GroupElement> images) {
    GroupAutomorphism a;
    a.permutation.reserve(g.order());
    for (const auto& x : g.elements()) a.permutation.push_back(g.index_of(apply_hom(g, images, x)));
    a.generator_images = std::move(images);
    return a;
}

} // namespace

std::vector<GroupAutomorphism> automorphisms(const AbelianGroup& g, const Budget& budget) {
    const auto& d = g.invariant_factors();
    const std::size_t k = d.size();
    // Candidate images of generator i: elements killed by d_i.
    std::vector<std::vector<GroupElement>> cand(k);
    Integer candidates = 1;
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& x : g.elements())
            if (g.multiple(d[i], x) == g.zero()) cand[i].push_back(x);
        candidates *= static_cast<unsigned long>(g.order());
    }
    if (candidates > Integer(static_cast<unsigned long>(budget.max_group_candidates())))
        throw BudgetExceeded("group automorphism enumeration: n^k = " + candidates.get_str() +
                             " exceeds candidate budget " + std::to_string(budget.max_group_candidates()));

    std::vector<GroupAutomorphism> out;
    std::vector<std::size_t> pos(k, 0);
    if (k == 0) {
        out.push_back(from_images(g, {}));
        return out;
    }
    std::vector<char> seen(g.order());
    while (true) {
        std::vector<GroupElement> images(k);
        for (std::size_t i = 0; i < k; ++i) images[i] = cand[i][pos[i]];
        std::fill(seen.begin(), seen.end(), 0);
        bool bijective = true;
        for (const auto& x : g.elements()) {
            auto idx = g.index_of(apply_hom(g, images, x));
            if (seen[idx]) {
                bijective = false;
                break;
            }
            seen[idx] = 1;
        }
        if (bijective) out.push_back(from_images(g, std::move(images)));
        std::size_t i = k;
        while (i-- > 0) {
            if (++pos[i] < cand[i].size()) break;
            pos[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
        budget.check("group automorphism enumeration");
    }
    return out;
}

GroupAutomorphism compose(const AbelianGroup& g, const GroupAutomorphism& outer, const GroupAutomorphism& inner) {
    std::vector<GroupElement> images;
    for (const auto& x : inner.generator_images) images.push_back(g.elements()[outer.permutation[g.index_of(x)]]);
    return from_images(g, std::move(images));
}

GroupAutomorphism inverse(const AbelianGroup& g, const GroupAutomorphism& a) {
    std::vector<std::size_t> inv(a.permutation.size());
    for (std::size_t i = 0; i < inv.size(); ++i) inv[a.permutation[i]] = i;
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < g.rank(); ++i) images.push_back(g.elements()[inv[g.index_of(g.generator(i))]]);
    return from_images(g, std::move(images));
}

Rational evaluate(const Character& phi, const GroupElement& g) {
    Rational s = 0;
    for (std::size_t i = 0; i < phi.generator_images.size(); ++i) s += g.residues[i] * phi.generator_images[i];
    return frac(s);
}

bool is_zero(const Character& phi) {
    return std::all_of(phi.generator_images.begin(), phi.generator_images.end(),
                       [](const Rational& q) { return q == 0; });
}

int character_order(const Character& phi) {
    long l = 1;
    for (const auto& q : phi.generator_images) l = std::lcm(l, q.get_den().get_si());
    return static_cast<int>(l);
}

std::vector<Character> dual_characters(const AbelianGroup& g) {
    std::vector<Character> out;
    out.reserve(g.order());
    // Characters correspond to tuples of numerators a_i in [0, d_i): q_i = a_i / d_i.
    for (const auto& a : g.elements()) {
        Character phi;
        for (std::size_t i = 0; i < g.rank(); ++i) {
            Rational q(a.residues[i], g.invariant_factors()[i]);
            q.canonicalize();
            phi.generator_images.push_back(q);
        }
        out.push_back(std::move(phi));
    }
    return out;
}

namespace {

void collect_prime_power_multisets(const std::vector<long>& pp, std::size_t start, long product, int max_order,
                                   std::vector<long>& current, std::vector<std::vector<long>>& out) {
    if (!current.empty()) out.push_back(current);
    for (std::size_t i = start; i < pp.size(); ++i) {
        if (product * pp[i] > max_order) continue;
        current.push_back(pp[i]);
        collect_prime_power_multisets(pp, i, product * pp[i], max_order, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<AbelianGroup> groups_up_to_order(int max_order) {
    if (max_order < 2) throw InvalidInput("max order must be >= 2");
    std::vector<long> prime_powers;
    for (long q = 2; q <= max_order; ++q) {
        auto f = factorize(q);
        if (f.size() == 1) prime_powers.push_back(q);
    }
    std::vector<std::vector<long>> multisets;
    std::vector<long> current;
    collect_prime_power_multisets(prime_powers, 0, 1, max_order, current, multisets);

    std::vector<AbelianGroup> groups;
    std::set<std::vector<int>> seen;
    for (const auto& m : multisets) {
        auto g = AbelianGroup::from_cyclic_factors(m);
        if (seen.insert(g.invariant_factors()).second) groups.push_back(std::move(g));
    }
    std::sort(groups.begin(), groups.end(), [](const AbelianGroup& a, const AbelianGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        if (a.rank() != b.rank()) return a.rank() < b.rank();
        return a.invariant_factors() < b.invariant_factors();
    });
    return groups;
}

std::vector<AbelianGroup> groups_of_order(int order) {
    std::vector<AbelianGroup> out;
    for (auto& g : groups_up_to_order(order))
        if (g.order() == order) out.push_back(std::move(g));
    return out;
}

} // namespace lgcert
