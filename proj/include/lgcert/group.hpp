#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lgcert/budget.hpp"
#include "lgcert/rational.hpp"

namespace lgcert {

/// Element of Z/d_1 × ... × Z/d_k, residues[i] in [0, d_i).
struct GroupElement {
    std::vector<int> residues;

    auto operator<=>(const GroupElement&) const = default;
    bool operator==(const GroupElement&) const = default;
};

/// Finite Abelian group in invariant-factor form d_1 | d_2 | ... | d_k with
/// a fixed enumeration of its elements (identity first, then lexicographic
/// on residue tuples).
class AbelianGroup {
public:
    /// Canonicalizes arbitrary cyclic factors (each >= 2) into invariant
    /// factors. An empty list yields the trivial group.
    static AbelianGroup from_cyclic_factors(const std::vector<long>& factors);

    /// Parses the CLI literal "d1,d2,...".
    static AbelianGroup parse(const std::string& literal);

    const std::vector<int>& invariant_factors() const noexcept { return factors_; }
    int order() const noexcept { return order_; }
    std::size_t rank() const noexcept { return factors_.size(); }

    const std::vector<GroupElement>& elements() const noexcept { return elements_; }
    /// Position of g in elements() (mixed-radix index).
    std::size_t index_of(const GroupElement& g) const;

    GroupElement zero() const;
    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement negate(const GroupElement& a) const;
    GroupElement multiple(long k, const GroupElement& a) const;
    /// Generator e_i of the i-th cyclic factor.
    GroupElement generator(std::size_t i) const;
    int element_order(const GroupElement& g) const;

    bool is_elementary_two_group() const;

    /// "C2xC4", "C5", "C1" for the trivial group.
    std::string name() const;

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

private:
    explicit AbelianGroup(std::vector<int> invariant_factors);

    std::vector<int> factors_;
    int order_ = 1;
    std::vector<GroupElement> elements_;
};

/// κ = |{x : 2x = 0}|, counted by enumeration.
int two_torsion_order(const AbelianGroup& g);

/// |{2x : x ∈ G}|, counted by enumeration.
int doubling_image_size(const AbelianGroup& g);

/// Group automorphism, stored both as images of the invariant-factor
/// generators and as a permutation of element indices.
struct GroupAutomorphism {
    std::vector<GroupElement> generator_images;
    std::vector<std::size_t> permutation;  // permutation[i] = index of image of elements()[i]

    bool operator==(const GroupAutomorphism& o) const { return permutation == o.permutation; }
};

/// All automorphisms, by enumerating generator images of the right order
/// and keeping the bijective ones. Throws BudgetExceeded when the candidate
/// count n^k exceeds budget.max_group_candidates().
std::vector<GroupAutomorphism> automorphisms(const AbelianGroup& g, const Budget& budget = {});

GroupAutomorphism compose(const AbelianGroup& g, const GroupAutomorphism& outer,
                          const GroupAutomorphism& inner);
GroupAutomorphism inverse(const AbelianGroup& g, const GroupAutomorphism& a);

/// Homomorphism G → Q/Z, stored as the images of the generators in [0, 1).
struct Character {
    std::vector<Rational> generator_images;

    bool operator==(const Character&) const = default;
};

/// φ(g) = Σ residues[i]·q_i reduced into [0, 1).
Rational evaluate(const Character& phi, const GroupElement& g);
bool is_zero(const Character& phi);
/// Order of φ in the dual group (lcm of the denominators).
int character_order(const Character& phi);

/// All n characters, in the lexicographic order of their numerators.
std::vector<Character> dual_characters(const AbelianGroup& g);

/// One representative per isomorphism type of order 2..max_order, in
/// increasing order and then lexicographic invariant factors.
std::vector<AbelianGroup> groups_up_to_order(int max_order);

/// Isomorphism types of exactly the given order.
std::vector<AbelianGroup> groups_of_order(int order);

} // namespace lgcert
