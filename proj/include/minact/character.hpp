#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "minact/cyclotomic.hpp"
#include "minact/group.hpp"

namespace minact {

/// Exact irreducible character. values[k] is the character value on the k-th
/// conjugacy class as an element of Z[zeta_m], m = order of the class
/// representative. eigen_mults[k][j] is the multiplicity of the eigenvalue
/// zeta_m^j of the representing matrix on that class.
struct Character {
    long long degree = 0;
    int fs_indicator = 0;
    std::vector<CyclotomicInteger> values;
    std::vector<std::vector<long long>> eigen_mults;
    uint64_t kernel_mask = 0; // bit k set iff class k is in the kernel

    bool operator==(const Character& o) const {
        return degree == o.degree && fs_indicator == o.fs_indicator &&
               values == o.values && eigen_mults == o.eigen_mults &&
               kernel_mask == o.kernel_mask;
    }
};

/// Complete exact character table plus the class data needed to use it
/// without the originating group object.
struct CharacterTable {
    long long group_order = 1;
    long long group_exponent = 1;
    uint64_t group_hash = 0;
    std::vector<long long> class_sizes;
    std::vector<long long> class_orders;
    std::vector<std::vector<int>> power_classes; // class of rep^t, t in [0, order)
    std::vector<Character> irreducibles;

    int class_count() const { return static_cast<int>(class_sizes.size()); }
    int power_class(int c, long long t) const;
    int inverse_class(int c) const;
    int trivial_index() const;
    /// number of solutions of g^2 = 1, identity included
    long long involution_count() const;
};

/// Exact table via class-matrix eigenvectors over a prime field F_l with
/// l = 1 (mod exponent) and l > 2|G|, lifted through eigenvalue
/// multiplicities. Retries with a larger prime on a failed lift.
CharacterTable compute_character_table(const FiniteGroup& G);

/// (1/|G|) sum over g of chi(g^2), via class sizes and square power maps.
int frobenius_schur(const CharacterTable& table, const Character& chi);

/// chi(1) for real type, 2*chi(1) otherwise (realification doubles).
long long real_degree(const Character& chi);

/// Determinant of the real form as +-1 per class. Trivial (all +1) for
/// fs_indicator 0 or -1, where the realification has determinant one.
std::vector<int> determinant_values(const CharacterTable& table, const Character& chi);

/// Index of the degree-1 irreducible equal to the determinant of chi's
/// real form (the trivial character's index when the determinant is trivial).
int determinant_character_index(const CharacterTable& table, const Character& chi);

enum class OrientationConstraint { any, orientation_preserving };

struct FaithfulSearchResult {
    long long dim = 0;
    std::vector<std::pair<int, int>> witness; // (irreducible index, multiplicity)

    bool operator==(const FaithfulSearchResult& o) const = default;
};

/// Minimal total real dimension of a faithful real representation, as a
/// multiset of irreducibles with trivial intersection of kernels; under
/// orientation_preserving the product of the constituents' determinants
/// must additionally be trivial. Branch-and-bound with multiplicities
/// capped at two plus a determinant-fixing linear character.
FaithfulSearchResult min_faithful_real_dim(const CharacterTable& table,
                                           OrientationConstraint constraint);

/// Exhaustive search over all multisets of total real dimension <= the
/// branch-and-bound result; independent certificate for the search above.
FaithfulSearchResult min_faithful_real_dim_bruteforce(const CharacterTable& table,
                                                      OrientationConstraint constraint);

/// Exact first and second orthogonality relations; throws LiftingFailure
/// with a description when violated.
void check_orthogonality(const CharacterTable& table);

} // namespace minact
