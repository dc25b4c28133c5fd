#include "minact/bounds.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace minact {

std::string to_string(Space s) {
    return s == Space::sphere ? "sphere" : "euclidean";
}
std::string to_string(Orientation o) {
    return o == Orientation::preserving ? "preserving" : "any";
}
std::string to_string(HomologyVariant v) {
    return v == HomologyVariant::mod_p_sphere ? "mod_p_sphere" : "mod_p_acyclic";
}
Space space_from_string(const std::string& s) {
    if (s == "sphere")
        return Space::sphere;
    if (s == "euclidean")
        return Space::euclidean;
    throw InvalidParams("unknown space: " + s);
}
Orientation orientation_from_string(const std::string& s) {
    if (s == "preserving")
        return Orientation::preserving;
    if (s == "any")
        return Orientation::any;
    throw InvalidParams("unknown orientation: " + s);
}
HomologyVariant variant_from_string(const std::string& s) {
    if (s == "mod_p_sphere")
        return HomologyVariant::mod_p_sphere;
    if (s == "mod_p_acyclic")
        return HomologyVariant::mod_p_acyclic;
    throw InvalidParams("unknown homology variant: " + s);
}
std::string to_string(Family f) {
    switch (f) {
    case Family::metacyclic:
        return "metacyclic";
    case Family::psl2:
        return "psl2";
    case Family::symmetric:
        return "symmetric";
    case Family::alternating:
        return "alternating";
    }
    throw InvalidParams("unknown family");
}
Family family_from_string(const std::string& s) {
    if (s == "metacyclic")
        return Family::metacyclic;
    if (s == "psl2")
        return Family::psl2;
    if (s == "symmetric")
        return Family::symmetric;
    if (s == "alternating")
        return Family::alternating;
    throw InvalidParams("unknown family: " + s);
}

namespace {

std::vector<int> allowed_eps_free(long long q, Orientation orientation) {
    std::vector<int> eps{1};
    if (orientation == Orientation::any && q % 2 == 0)
        eps.push_back(-1);
    return eps;
}

// the complement of a fixed set carries no orientation constraint
std::vector<int> allowed_eps_complement(long long q) {
    std::vector<int> eps{1};
    if (q % 2 == 0)
        eps.push_back(-1);
    return eps;
}

std::string eps_str(int eps) {
    return eps > 0 ? "+1" : "-1";
}

std::optional<std::string> sphere_reason(long long n, long long q,
                                         Orientation orientation) {
    for (int eps : allowed_eps_free(q, orientation)) {
        if (admissible_closed_form(n, q, eps)) {
            std::ostringstream os;
            os << "free Z_p case: eps = " << eps_str(eps) << ", n+1 = " << n + 1
               << (eps > 0 ? " is a multiple of 2q = " : " is an odd multiple of q = ")
               << (eps > 0 ? 2 * q : q);
            return os.str();
        }
    }
    for (long long d = 0; d <= n - 2; ++d) {
        const long long m = n - d - 1;
        for (int eps : allowed_eps_complement(q)) {
            if (admissible_closed_form(m, q, eps)) {
                std::ostringstream os;
                os << "fixed-set case: fixed d-sphere with d = " << d
                   << ", complement is a free mod-p homology " << m
                   << "-sphere, eps = " << eps_str(eps) << ", m+1 = " << m + 1;
                return os.str();
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> euclidean_reason(long long n, long long q,
                                            Orientation orientation) {
    for (long long d = 0; d <= n - 1; ++d) {
        if (orientation == Orientation::preserving && d == 0) {
            if (n % (2 * q) == 0) {
                std::ostringstream os;
                os << "global fixed point (d = 0): boundary (n-1)-sphere of an "
                      "invariant neighbourhood carries a free orientation-"
                      "preserving action, n = "
                   << n << " is a multiple of 2q = " << 2 * q;
                return os.str();
            }
            continue;
        }
        const long long m = n - d - 1;
        if (m < 1)
            continue;
        for (int eps : allowed_eps_complement(q)) {
            if (admissible_closed_form(m, q, eps)) {
                std::ostringstream os;
                os << "acyclic fixed set of dimension d = " << d
                   << ": complement is a free mod-p homology " << m
                   << "-sphere, eps = " << eps_str(eps) << ", m+1 = " << m + 1;
                return os.str();
            }
        }
    }
    return std::nullopt;
}

} // namespace

bool sphere_feasible(long long n, long long p, long long q, Orientation orientation) {
    if (n < 1)
        throw InvalidParams("sphere_feasible: n must be >= 1");
    metacyclic_params(p, q); // validates (p, q)
    return sphere_reason(n, q, orientation).has_value();
}

bool euclidean_feasible(long long n, long long p, long long q,
                        Orientation orientation) {
    if (n < 1)
        throw InvalidParams("euclidean_feasible: n must be >= 1");
    metacyclic_params(p, q);
    return euclidean_reason(n, q, orientation).has_value();
}

long long minimal_metacyclic_dim_traced(long long p, long long q,
                                        const Setting& setting,
                                        std::vector<std::string>* trace) {
    metacyclic_params(p, q);
    for (long long n = 1; n <= 4 * q + 4; ++n) {
        const auto reason = setting.space == Space::sphere
                                ? sphere_reason(n, q, setting.orientation)
                                : euclidean_reason(n, q, setting.orientation);
        if (reason) {
            if (trace) {
                std::ostringstream os;
                os << "minimal " << to_string(setting.space) << " dimension n = " << n
                   << " under orientation = " << to_string(setting.orientation)
                   << "; " << *reason;
                trace->push_back(os.str());
            }
            return n;
        }
    }
    throw Error("minimal_metacyclic_dim: no feasible dimension below 4q+4");
}

long long minimal_metacyclic_dim(long long p, long long q, const Setting& setting) {
    return minimal_metacyclic_dim_traced(p, q, setting, nullptr);
}

namespace {

std::vector<WitnessEntry> witness_entries(const CharacterTable& table,
                                          const FaithfulSearchResult& result) {
    std::vector<WitnessEntry> out;
    for (const auto& [idx, mult] : result.witness) {
        const Character& chi = table.irreducibles[static_cast<size_t>(idx)];
        out.push_back(
            WitnessEntry{chi.degree, chi.fs_indicator, real_degree(chi), mult});
    }
    return out;
}

} // namespace

DimensionReport minimal_action_dim(Family family, long long p, long long q,
                                   const Setting& setting,
                                   const TableSource& tables) {
    DimensionReport report;
    report.family = to_string(family);
    report.p = p;
    report.space = setting.space;
    report.orientation = setting.orientation;
    report.variant = setting.variant;

    std::optional<FiniteGroup> ambient;
    long long sub_q = 0;
    switch (family) {
    case Family::metacyclic: {
        const MetacyclicParams params = metacyclic_params(p, q);
        ambient.emplace(metacyclic_group(params, tables.group_budget));
        sub_q = q;
        report.q = q;
        std::ostringstream os;
        os << "group Z_" << p << " x| Z_" << q << " with k = " << params.k.value
           << "; the congruence bound applies to the group itself";
        report.trace.push_back(os.str());
        break;
    }
    case Family::psl2: {
        ambient.emplace(psl2(p, tables.group_budget));
        auto [borel, params] = borel_subgroup_psl2(p, tables.group_budget);
        sub_q = params.q;
        std::ostringstream os;
        os << "designated subgroup of PSL(2," << p << "): upper-triangular (Borel) "
           << "subgroup Z_" << p << " x| Z_" << params.q << " of order "
           << borel.order() << ", k = " << params.k.value;
        report.trace.push_back(os.str());
        break;
    }
    case Family::symmetric: {
        if (!is_prime(p) || p < 3)
            throw InvalidParams("minimal_action_dim: symmetric family needs an odd prime p");
        ambient.emplace(symmetric_group(static_cast<int>(p), tables.group_budget));
        sub_q = p - 1;
        std::ostringstream os;
        os << "designated subgroup of S_" << p << ": Z_" << p << " x| Z_" << p - 1
           << " embedded by its action on the " << p << " cosets of Z_" << p - 1;
        report.trace.push_back(os.str());
        break;
    }
    case Family::alternating: {
        if (!is_prime(p) || p < 5)
            throw InvalidParams("minimal_action_dim: alternating family needs a prime p >= 5");
        ambient.emplace(alternating_group(static_cast<int>(p), tables.group_budget));
        sub_q = (p - 1) / 2;
        std::ostringstream os;
        os << "designated subgroup of A_" << p << ": Z_" << p << " x| Z_" << (p - 1) / 2
           << ", the even-permutation half of the coset embedding of Z_" << p
           << " x| Z_" << p - 1;
        report.trace.push_back(os.str());
        break;
    }
    }

    Setting effective = setting;
    if (ambient->is_perfect()) {
        effective.orientation = Orientation::preserving;
        report.trace.push_back(
            "orientation forced to preserving: group is perfect, every action "
            "preserves orientation");
    }

    report.lower_bound =
        minimal_metacyclic_dim_traced(p, sub_q, effective, &report.trace);

    const CharacterTable table = tables(*ambient);
    const OrientationConstraint constraint =
        effective.orientation == Orientation::preserving
            ? OrientationConstraint::orientation_preserving
            : OrientationConstraint::any;
    const FaithfulSearchResult mfd = min_faithful_real_dim(table, constraint);
    report.witness = witness_entries(table, mfd);
    report.upper_bound =
        setting.space == Space::sphere ? mfd.dim - 1 : mfd.dim;
    {
        std::ostringstream os;
        os << "upper bound: faithful real representation of dimension " << mfd.dim;
        if (setting.space == Space::sphere)
            os << " acting on the unit sphere S^" << mfd.dim - 1;
        report.trace.push_back(os.str());
    }

    if (family == Family::alternating && p % 4 == 1) {
        report.note = "no coincidence claimed for alternating groups with p = 1 (mod 4)";
    } else {
        report.match = report.lower_bound == report.upper_bound;
    }
    return report;
}

long long elementary_abelian_min_dim(long long p, long long k,
                                     const Setting& setting) {
    if (!is_prime(p) || k < 1)
        throw InvalidParams("elementary_abelian_min_dim: need prime p and k >= 1");
    const bool acyclic = setting.variant == HomologyVariant::mod_p_acyclic;
    if (p != 2)
        return acyclic ? 2 * k : 2 * k - 1;
    if (setting.orientation == Orientation::preserving)
        return acyclic ? k + 1 : k;
    return acyclic ? k : k - 1;
}

std::vector<AtlasEntry> parse_atlas_facts(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedFactsEntry(std::string("facts file is not valid JSON: ") +
                                  e.what());
    }
    if (!doc.is_array())
        throw MalformedFactsEntry("facts file must be a JSON array");
    std::vector<AtlasEntry> out;
    for (const auto& j : doc) {
        try {
            AtlasEntry e;
            e.name = j.at("name").get<std::string>();
            e.subgroup_p = j.at("subgroup_p").get<long long>();
            e.subgroup_k = j.at("subgroup_k").get<long long>();
            e.orientation =
                orientation_from_string(j.at("orientation").get<std::string>());
            e.claimed_sphere_dim = j.at("claimed_sphere_dim").get<long long>();
            e.citation = j.at("citation").get<std::string>();
            if (!is_prime(e.subgroup_p) || e.subgroup_k < 1 ||
                e.claimed_sphere_dim < 0)
                throw MalformedFactsEntry("facts entry out of range: " + e.name);
            out.push_back(std::move(e));
        } catch (const nlohmann::json::exception& ex) {
            throw MalformedFactsEntry(std::string("bad facts entry: ") + ex.what());
        }
    }
    return out;
}

std::vector<AtlasEntry> load_atlas_facts(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw MalformedFactsEntry("cannot open facts file: " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_atlas_facts(buf.str());
}

DimensionReport atlas_check(const AtlasEntry& entry) {
    DimensionReport report;
    report.family = entry.name;
    report.p = entry.subgroup_p;
    report.q = entry.subgroup_k;
    report.space = Space::sphere;
    report.orientation = entry.orientation;
    report.variant = HomologyVariant::mod_p_sphere;
    Setting setting;
    setting.orientation = entry.orientation;
    report.lower_bound =
        elementary_abelian_min_dim(entry.subgroup_p, entry.subgroup_k, setting);
    report.upper_bound = entry.claimed_sphere_dim;
    report.match = report.lower_bound == report.upper_bound;
    std::ostringstream os;
    os << "elementary abelian subgroup (Z_" << entry.subgroup_p << ")^"
       << entry.subgroup_k << " (" << entry.citation << ") forces dimension >= "
       << report.lower_bound << "; linear action on S^" << entry.claimed_sphere_dim;
    report.trace.push_back(os.str());
    return report;
}

} // namespace minact
