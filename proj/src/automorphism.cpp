#include "lgcert/automorphism.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "lgcert/errors.hpp"
#include "lgcert/lg_lattice.hpp"

namespace lgcert {

namespace {

using Coeffs = std::vector<std::int64_t>;
using Perm = std::vector<std::uint32_t>;

std::int64_t to_i64(const Integer& z) {
    if (!z.fits_slong_p()) throw Unsupported("automorphism search: entries exceed 64-bit range");
    return z.get_si();
}

// Rows of m span a primitive sublattice of Z^r (extendable to a basis).
bool is_primitive(const std::vector<ZVector>& rows, std::size_t r) {
    ZMatrix t(r, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < r; ++j) t(j, i) = rows[i][j];
    const HermiteResult h = hermite_normal_form(t);
    if (h.rank != rows.size()) return false;
    for (std::size_t i = 0; i < h.rank; ++i)
        for (std::size_t j = 0; j < h.form.cols(); ++j)
            if (h.form(i, j) != 0) {
                if (abs(h.form(i, j)) != 1) return false;
                break;
            }
    return true;
}

class AutSearch {
public:
    AutSearch(const Lattice& l, const Budget& budget, AutSearchStats& stats)
        : l_(l), r_(l.rank()), budget_(budget), stats_(stats) {
        collect_vectors();
        choose_base();
        build_tables();
    }

    Integer run() {
        Integer order = 1;
        std::vector<std::size_t> orbit_len(r_, 1);
        for (std::size_t level = r_; level-- > 0;) {
            auto cands = initial_candidates();
            for (std::size_t k = 0; k < level; ++k)
                if (!fix(cands, k, base_[k])) throw Error("automorphism search: base fails its own fingerprint");
            std::vector<char> in_orbit(v_.size(), 0), excluded(v_.size(), 0);
            std::vector<std::uint32_t> orbit = orbit_of(base_[level]);
            for (auto o : orbit) in_orbit[o] = 1;
            for (std::uint32_t cand : cands[level]) {
                if (in_orbit[cand] || excluded[cand]) continue;
                std::vector<std::uint32_t> images(base_.begin(), base_.begin() + static_cast<std::ptrdiff_t>(level));
                images.push_back(cand);
                auto next = cands;
                bool found = false;
                if (fix(next, level, cand)) {
                    try {
                        found = extend(next, level + 1, images);
                    } catch (const BudgetExceeded&) {
                        throw BudgetExceeded(budget_message(), order * static_cast<long>(orbit.size()));
                    }
                }
                if (found) {
                    add_generator(images);
                    orbit = orbit_of(base_[level]);
                    for (auto o : orbit) in_orbit[o] = 1;
                } else {
                    for (auto o : orbit_of(cand)) excluded[o] = 1;
                }
            }
            orbit_len[level] = orbit.size();
            order *= static_cast<long>(orbit.size());
        }
        stats_.orbits = orbit_len;
        stats_.generators = gens_.size();
        return order;
    }

private:
    void collect_vectors() {
        const ZMatrix t = lll_transform(l_);
        Rational bound = 0;
        for (std::size_t i = 0; i < r_; ++i) {
            ZVector c = t.row(i);
            bound = std::max(bound, norm_sq(l_.combine(c)));
        }
        auto vs = vectors_up_to(l_, bound);
        stats_.search_bound = bound;
        stats_.search_vectors = vs.size();
        if (vs.size() >= std::numeric_limits<std::uint32_t>::max()) throw Unsupported("automorphism search: too many vectors");
        for (auto& v : vs) {
            Coeffs c(r_);
            for (std::size_t j = 0; j < r_; ++j) c[j] = to_i64(v.coeffs[j]);
            index_.emplace(c, v_.size());
            v_.push_back(std::move(c));
            zcoeffs_.push_back(std::move(v.coeffs));
        }
        // Fallback base: the LLL vectors themselves (they lie in V by construction).
        for (std::size_t i = 0; i < r_; ++i) {
            Coeffs c(r_);
            for (std::size_t j = 0; j < r_; ++j) c[j] = to_i64(t(i, j));
            lll_base_.push_back(locate(c));
        }
    }

    // Greedy: shortest vectors first, keeping the chosen set primitive.
    void choose_base() {
        std::vector<ZVector> rows;
        std::vector<std::uint32_t> chosen;
        for (std::uint32_t i = 0; i < v_.size() && chosen.size() < r_; ++i) {
            rows.push_back(zcoeffs_[i]);
            if (is_primitive(rows, r_))
                chosen.push_back(i);
            else
                rows.pop_back();
        }
        base_ = chosen.size() == r_ ? chosen : lll_base_;
    }

    void build_tables() {
        const QMatrix& g = l_.gram();
        Integer den = 1;
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < r_; ++j) den = lcm(den, Integer(g(i, j).get_den()));
        std::vector<Coeffs> gz(r_, Coeffs(r_));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < r_; ++j) gz[i][j] = to_i64(Integer(g(i, j) * den));
        const std::size_t n = v_.size();
        ip_.assign(n * n, 0);
        std::vector<Coeffs> w(n, Coeffs(r_, 0));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t i = 0; i < r_; ++i)
                if (v_[a][i] != 0)
                    for (std::size_t j = 0; j < r_; ++j) w[a][j] += v_[a][i] * gz[i][j];
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) {
                std::int64_t s = 0;
                for (std::size_t j = 0; j < r_; ++j) s += w[a][j] * v_[b][j];
                ip_[a * n + b] = ip_[b * n + a] = s;
            }
        f_.assign(r_ * r_, 0);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < r_; ++j) f_[i * r_ + j] = ip(base_[i], base_[j]);

        // Coordinates of every vector of V in the chosen base.
        QMatrix m(r_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < r_; ++j) m(i, j) = zcoeffs_[base_[i]][j];
        const QMatrix minv = inverse(m);
        base_coords_.assign(n, Coeffs(r_, 0));
        for (std::size_t a = 0; a < n; ++a) {
            const QVector c = to_rational(zcoeffs_[a]) * minv;
            for (std::size_t j = 0; j < r_; ++j) {
                if (c[j].get_den() != 1) throw Error("automorphism search: chosen base is not a lattice basis");
                base_coords_[a][j] = to_i64(c[j].get_num());
            }
        }

        // Candidate counts of the identity: expected[k][m] for the prefix b_0..b_k fixed.
        auto cands = initial_candidates();
        expected_.assign(r_, std::vector<std::size_t>(r_, 0));
        for (std::size_t k = 0; k < r_; ++k) {
            if (!fix(cands, k, base_[k], /*record=*/true)) throw Error("automorphism search: inconsistent base");
        }
    }

    std::int64_t ip(std::uint32_t a, std::uint32_t b) const { return ip_[a * v_.size() + b]; }
    std::int64_t f(std::size_t i, std::size_t j) const { return f_[i * r_ + j]; }

    std::uint32_t locate(const Coeffs& c) const {
        auto it = index_.find(c);
        if (it == index_.end()) throw Error("automorphism search: image vector outside the search set");
        return static_cast<std::uint32_t>(it->second);
    }

    std::vector<std::vector<std::uint32_t>> initial_candidates() const {
        std::vector<std::vector<std::uint32_t>> c(r_);
        for (std::uint32_t a = 0; a < v_.size(); ++a)
            for (std::size_t m = 0; m < r_; ++m)
                if (ip(a, a) == f(m, m)) c[m].push_back(a);
        return c;
    }

    // Fixes the image of base vector k to v, filtering candidates of deeper
    // levels; false if a count differs from the identity's.
    bool fix(std::vector<std::vector<std::uint32_t>>& cands, std::size_t k, std::uint32_t v, bool record = false) {
        for (std::size_t m = k + 1; m < r_; ++m) {
            auto& c = cands[m];
            const std::int64_t target = f(k, m);
            c.erase(std::remove_if(c.begin(), c.end(), [&](std::uint32_t w) { return w == v || ip(w, v) != target; }),
                    c.end());
            if (record)
                expected_[k][m] = c.size();
            else if (c.size() != expected_[k][m])
                return false;
        }
        return true;
    }

    bool extend(std::vector<std::vector<std::uint32_t>>& cands, std::size_t depth, std::vector<std::uint32_t>& images) {
        if (depth == r_) return true;
        for (std::uint32_t v : cands[depth]) {
            if ((++stats_.nodes & 0x3ff) == 0) budget_.check("lattice automorphism search");
            auto next = cands;
            if (!fix(next, depth, v)) continue;
            images.push_back(v);
            if (extend(next, depth + 1, images)) return true;
            images.pop_back();
        }
        return false;
    }

    // Builds the permutation of V induced by base_[i] ↦ images[i] and verifies it.
    void add_generator(const std::vector<std::uint32_t>& images) {
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < r_; ++j)
                if (ip(images[i], images[j]) != f(i, j)) throw Error("automorphism search: generator breaks the Gram matrix");
        const std::size_t n = v_.size();
        Perm p(n);
        std::vector<char> hit(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            Coeffs c(r_, 0);
            for (std::size_t k = 0; k < r_; ++k) {
                const std::int64_t t = base_coords_[a][k];
                if (t == 0) continue;
                for (std::size_t j = 0; j < r_; ++j) c[j] += t * v_[images[k]][j];
            }
            p[a] = locate(c);
            if (hit[p[a]]++) throw Error("automorphism search: generator is not a bijection of V");
        }
        gens_.push_back(std::move(p));
    }

    std::vector<std::uint32_t> orbit_of(std::uint32_t start) const {
        std::vector<std::uint32_t> orbit{start};
        std::vector<char> seen(v_.size(), 0);
        seen[start] = 1;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& g : gens_) {
                const std::uint32_t y = g[orbit[i]];
                if (!seen[y]) {
                    seen[y] = 1;
                    orbit.push_back(y);
                }
            }
        return orbit;
    }

    std::string budget_message() const {
        return "lattice automorphism search ran out of budget after " + std::to_string(stats_.nodes) + " nodes";
    }

    const Lattice& l_;
    std::size_t r_;
    const Budget& budget_;
    AutSearchStats& stats_;

    std::vector<Coeffs> v_;
    std::vector<ZVector> zcoeffs_;
    std::map<Coeffs, std::size_t> index_;
    std::vector<std::uint32_t> lll_base_, base_;
    std::vector<std::int64_t> ip_, f_;
    std::vector<Coeffs> base_coords_;
    std::vector<std::vector<std::size_t>> expected_;
    std::vector<Perm> gens_;
};

} // namespace

Integer aut_order(const Lattice& l, const Budget& budget, AutSearchStats* stats) {
    if (l.rank() == 0) throw InvalidInput("aut_order: lattice has rank 0");
    AutSearchStats local;
    AutSearch search(l, budget, stats ? *stats : local);
    return search.run();
}

Integer subgroup_order(const AbelianGroup& g, const Budget& budget) {
    if (g.order() < 2) throw InvalidInput("subgroup_order needs |G| >= 2");
    return Integer(2) * g.order() * static_cast<unsigned long>(automorphisms(g, budget).size());
}

AutReport aut_report(const AbelianGroup& g, const Budget& budget) {
    if (g.order() < 3)
        throw InvalidInput("the automorphism ratio needs |G| >= 3; for |G| = 2 the sign flip and the translation coincide");
    AutReport rep;
    rep.subgroup_order = subgroup_order(g, budget);
    rep.aut_order = aut_order(build_lg(g).lattice, budget);
    if (rep.aut_order % rep.subgroup_order != 0)
        throw Error("|Aut(L_G)| = " + rep.aut_order.get_str() + " is not a multiple of the subgroup order " +
                    rep.subgroup_order.get_str());
    rep.ratio = fraction(rep.aut_order, rep.subgroup_order);
    return rep;
}

Rational aut_ratio(const AbelianGroup& g, const Budget& budget) { return aut_report(g, budget).ratio; }

bool predicted_ratio_one(int n) { return n == 3 || n == 4 || n == 6 || n >= 12; }

AutTheoremCheck theorem_auto_check(const AbelianGroup& g, const Budget& budget) {
    AutTheoremCheck c;
    c.ratio = aut_ratio(g, budget);
    c.ratio_is_one = c.ratio == 1;
    c.predicted = predicted_ratio_one(g.order());
    c.agrees = c.ratio_is_one == c.predicted;
    return c;
}

} // namespace lgcert
