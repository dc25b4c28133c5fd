#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minact/modular.hpp"
#include "minact/perm.hpp"

namespace minact {

struct ConjugacyClass {
    Permutation representative;
    long long size = 0;
    long long element_order = 0;
};

/// Parameters of Z_p x| Z_q: the generator of Z_q conjugates the Z_p
/// generator to its k-th power, where k has multiplicative order q mod p.
struct MetacyclicParams {
    long long p = 0;
    long long q = 0;
    Residue k;
};

/// Validates p odd prime, q >= 2, q | p-1 and picks the canonical
/// k = g^((p-1)/q) for the smallest primitive root g.
MetacyclicParams metacyclic_params(long long p, long long q);

constexpr long long kDefaultGroupBudget = 100000;

/// Finite permutation group stored by full element enumeration.
/// Immutable after construction; safe to share across threads.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<Permutation> generators,
                         long long budget = kDefaultGroupBudget);

    int degree() const { return degree_; }
    long long order() const { return static_cast<long long>(elements_.size()); }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }

    /// -1 if absent.
    int element_index(const Permutation& p) const;
    bool contains(const Permutation& p) const { return element_index(p) >= 0; }
    int inverse_index(int i) const { return inverse_[static_cast<size_t>(i)]; }
    int product_index(int i, int j) const;

    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    int class_of_element(int element_idx) const {
        return class_of_[static_cast<size_t>(element_idx)];
    }
    /// Class of rep(class_idx)^t.
    int power_class(int class_idx, long long t) const;
    long long exponent() const { return exponent_; }

    bool is_perfect() const { return derived_order_ == order(); }
    long long derived_subgroup_order() const { return derived_order_; }
    long long abelianization_order() const { return order() / derived_order_; }
    bool has_trivial_center() const;

    /// elements()[i] == elements()[word[i].parent] * generators()[word[i].gen]
    /// for i > 0; entry 0 is the identity.
    struct WordStep {
        int parent = -1;
        int gen = -1;
    };
    const std::vector<WordStep>& bfs_words() const { return words_; }

    /// Stable across runs; depends only on the element set and degree.
    uint64_t canonical_hash() const { return hash_; }

private:
    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, int, PermutationHash> index_;
    std::vector<int> inverse_;
    std::vector<WordStep> words_;
    std::vector<ConjugacyClass> classes_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> power_classes_; // per class, t in [0, order)
    long long exponent_ = 1;
    long long derived_order_ = 1;
    uint64_t hash_ = 0;

    void enumerate(long long budget);
    void compute_classes();
    void compute_derived_subgroup();
    void compute_hash();
};

FiniteGroup metacyclic_group(const MetacyclicParams& params,
                             long long budget = kDefaultGroupBudget);

/// PSL(2,p) acting on the projective line over Z_p (p+1 points; the point
/// at index p is infinity), generated by z -> z+1 and z -> -1/z.
FiniteGroup psl2(long long p, long long budget = kDefaultGroupBudget);

FiniteGroup symmetric_group(int n, long long budget = kDefaultGroupBudget);
FiniteGroup alternating_group(int n, long long budget = kDefaultGroupBudget);
FiniteGroup cyclic_group(long long n, long long budget = kDefaultGroupBudget);

/// Per-generator permutations of G on the left cosets of the subgroup
/// generated by subgroup_gens. Throws NotASubgroup if a generator is
/// outside G.
std::vector<Permutation> coset_images(const FiniteGroup& G,
                                      const std::vector<Permutation>& subgroup_gens);

/// Image of G acting by left multiplication on the left cosets of the
/// subgroup generated by subgroup_gens.
FiniteGroup coset_action(const FiniteGroup& G,
                         const std::vector<Permutation>& subgroup_gens,
                         long long budget = kDefaultGroupBudget);

/// Stabilizer of infinity in psl2(p): generated by z -> z+1 and z -> g^2 z
/// for the smallest primitive root g. Isomorphic to Z_p x| Z_{(p-1)/2}.
std::pair<FiniteGroup, MetacyclicParams> borel_subgroup_psl2(
    long long p, long long budget = kDefaultGroupBudget);

} // namespace minact
