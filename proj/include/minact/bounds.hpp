#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "minact/character.hpp"
#include "minact/spectral.hpp"
#include "minact/table_cache.hpp"

namespace minact {

enum class Space { sphere, euclidean };
enum class HomologyVariant { mod_p_sphere, mod_p_acyclic };

struct Setting {
    Space space = Space::sphere;
    Orientation orientation = Orientation::any;
    HomologyVariant variant = HomologyVariant::mod_p_sphere;
};

std::string to_string(Space s);
std::string to_string(Orientation o);
std::string to_string(HomologyVariant v);
Space space_from_string(const std::string& s);
Orientation orientation_from_string(const std::string& s);
HomologyVariant variant_from_string(const std::string& s);

/// Case split for actions of Z_p x| Z_q on a mod p homology n-sphere:
/// either Z_p acts freely (the congruence applies to n itself) or its fixed
/// set is a mod p homology d-sphere and the congruence applies to the
/// complement of dimension n-d-1.
bool sphere_feasible(long long n, long long p, long long q, Orientation orientation);

/// Case split on R^n: the Z_p fixed set is nonempty and acyclic of some
/// dimension d >= 0; the complement is a mod p homology sphere of dimension
/// n-d-1. Under a global orientation-preserving action with d = 0 the fixed
/// point is global and the boundary (n-1)-sphere forces n = 0 (mod 2q).
bool euclidean_feasible(long long n, long long p, long long q,
                        Orientation orientation);

/// Least feasible n for the given setting, with a human-readable trace of
/// the successful case split.
long long minimal_metacyclic_dim(long long p, long long q, const Setting& setting);
long long minimal_metacyclic_dim_traced(long long p, long long q,
                                        const Setting& setting,
                                        std::vector<std::string>* trace);

enum class Family { metacyclic, psl2, symmetric, alternating };

std::string to_string(Family f);
Family family_from_string(const std::string& s);

struct WitnessEntry {
    long long degree = 0;
    int fs_indicator = 0;
    long long real_degree = 0;
    int multiplicity = 0;

    bool operator==(const WitnessEntry& o) const = default;
};

struct DimensionReport {
    std::string family;
    long long p = 0;
    long long q = 0; // 0 when determined by the family
    Space space = Space::sphere;
    Orientation orientation = Orientation::any;
    HomologyVariant variant = HomologyVariant::mod_p_sphere;
    long long lower_bound = 0;
    long long upper_bound = 0;
    std::optional<bool> match;
    std::string note;
    std::vector<std::string> trace;
    std::vector<WitnessEntry> witness;

    bool operator==(const DimensionReport& o) const = default;
};

/// Character tables on demand, optionally disk-cached.
struct TableSource {
    std::filesystem::path cache_dir; // empty disables caching
    long long group_budget = kDefaultGroupBudget;

    CharacterTable operator()(const FiniteGroup& G) const {
        return character_table_cached(G, cache_dir);
    }
};

/// Lower bound through the designated metacyclic subgroup, upper bound from
/// the minimal faithful real representation of the ambient group; for
/// perfect ambient groups the orientation is forced to preserving. The
/// match flag is left unset for alternating groups with p = 1 (mod 4),
/// where no coincidence is claimed.
DimensionReport minimal_action_dim(Family family, long long p, long long q,
                                   const Setting& setting,
                                   const TableSource& tables);

/// (Z_p)^k minima: p odd -> 2k-1 sphere / 2k acyclic; p = 2 -> k-1 / k,
/// or k / k+1 when orientation-preserving.
long long elementary_abelian_min_dim(long long p, long long k,
                                     const Setting& setting);

struct AtlasEntry {
    std::string name;
    long long subgroup_p = 0;
    long long subgroup_k = 0;
    Orientation orientation = Orientation::any;
    long long claimed_sphere_dim = 0;
    std::string citation;
};

/// JSON array of {name, subgroup_p, subgroup_k, orientation,
/// claimed_sphere_dim, citation}. Throws MalformedFactsEntry on bad fields.
std::vector<AtlasEntry> load_atlas_facts(const std::filesystem::path& path);
std::vector<AtlasEntry> parse_atlas_facts(const std::string& text);

/// Lower bound from the elementary abelian subgroup vs the recorded linear
/// sphere dimension.
DimensionReport atlas_check(const AtlasEntry& entry);

} // namespace minact
