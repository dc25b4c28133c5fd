#include "minact/verification.hpp"

#include <algorithm>
#include <sstream>

#include "minact/cohomology.hpp"

namespace minact {

namespace {

std::vector<long long> odd_primes_below(long long bound) {
    std::vector<long long> out;
    for (long long p = 3; p < bound; ++p)
        if (is_prime(p))
            out.push_back(p);
    return out;
}

std::vector<long long> divisors_ge2(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d <= n; ++d)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

void check_patterns(VerificationRun& run) {
    long long checked = 0;
    long long failures = 0;
    std::string first_failure;
    for (long long p : odd_primes_below(50)) {
        for (long long q : divisors_ge2(p - 1)) {
            for (int eps : {1, -1}) {
                if (eps == -1 && q % 2 != 0)
                    continue;
                const TwistedModuleSpec spec = twisted_module_spec(p, q, eps);
                for (long long i = 0; i <= 500; ++i) {
                    ++checked;
                    if (invariant_dim(i, spec) !=
                        invariant_pattern_closed_form(i, q, eps)) {
                        ++failures;
                        if (first_failure.empty()) {
                            std::ostringstream os;
                            os << "(p=" << p << ",q=" << q << ",eps=" << eps
                               << ",i=" << i << ")";
                            first_failure = os.str();
                        }
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << checked << " degrees over p < 50";
    if (failures)
        os << "; " << failures << " mismatches, first at " << first_failure;
    run.checks.push_back(CheckResult{"invariant pattern closed form = scalar oracle",
                                     failures == 0, os.str(), 1});
}

void check_spectral(VerificationRun& run) {
    long long checked = 0;
    long long failures = 0;
    std::string first_failure;
    for (long long p : odd_primes_below(50)) {
        for (long long q : divisors_ge2(p - 1)) {
            for (int eps : {1, -1}) {
                if (eps == -1 && q % 2 != 0)
                    continue;
                for (long long n = 1; n <= 300; ++n) {
                    ++checked;
                    if (admissible(n, p, q, eps) !=
                        admissible_closed_form(n, q, eps)) {
                        ++failures;
                        if (first_failure.empty()) {
                            std::ostringstream os;
                            os << "(n=" << n << ",p=" << p << ",q=" << q
                               << ",eps=" << eps << ")";
                            first_failure = os.str();
                        }
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << checked << " pages over p < 50, n <= 300";
    if (failures)
        os << "; " << failures << " mismatches, first at " << first_failure;
    run.checks.push_back(CheckResult{"two-row differential matching = congruence",
                                     failures == 0, os.str(), 3});
}

int bar_degree_cap(long long order, long long dim, long long budget, long long period) {
    int cap = 0;
    long long power = order; // |G|^(i+1) for i = 0
    while (cap < period) {
        if (power > budget / order)
            break;
        power *= order;
        if (power * dim > budget)
            break;
        ++cap;
    }
    return static_cast<int>(std::min<long long>(cap, period));
}

void check_bar(VerificationRun& run, long long budget) {
    {
        const FiniteGroup s3 = symmetric_group(3);
        const auto dims = bar_cohomology_dims(s3, trivial_module(3, 1), 5, budget);
        const std::vector<long long> expected{1, 0, 0, 1, 1, 0};
        bool ok = dims == expected;
        const TwistedModuleSpec spec = twisted_module_spec(3, 2, 1);
        for (long long i = 1; i <= 5; ++i)
            if (dims[static_cast<size_t>(i)] != invariant_dim(i, spec))
                ok = false;
        std::ostringstream os;
        os << "H^i(S_3; Z_3) for i=0..5 = (";
        for (size_t i = 0; i < dims.size(); ++i)
            os << (i ? "," : "") << dims[i];
        os << "), matches the (q=2, eps=+1) pattern";
        run.checks.push_back(
            CheckResult{"bar resolution vs classical S_3 cohomology", ok, os.str(), 2});
    }
    for (const auto& [p, q, imax] :
         std::vector<std::tuple<long long, long long, int>>{{3, 2, 4}, {5, 2, 3}}) {
        const bool ok = shapiro_vanishing_check(p, q, imax, budget);
        std::ostringstream os;
        os << "H^i(metacyclic(" << p << "," << q << "); induced module) = 0 for 1 <= i <= "
           << imax;
        run.checks.push_back(CheckResult{"induced-module vanishing (p=" +
                                             std::to_string(p) + ",q=" +
                                             std::to_string(q) + ")",
                                         ok, os.str(), 2});
    }
    for (const auto& [p, q] : std::vector<std::pair<long long, long long>>{
             {3, 2}, {5, 2}, {5, 4}, {7, 2}}) {
        const FiniteGroup G = metacyclic_group(metacyclic_params(p, q));
        for (int eps : {1, -1}) {
            if (eps == -1 && q % 2 != 0)
                continue;
            const TwistedModuleSpec spec = twisted_module_spec(p, q, eps);
            const int cap = bar_degree_cap(G.order(), 1, budget, 2 * q);
            const auto dims = bar_cohomology_dims(G, twisted_line(spec), cap, budget);
            bool ok = true;
            for (int i = 0; i <= cap; ++i)
                if (dims[static_cast<size_t>(i)] != invariant_dim(i, spec))
                    ok = false;
            std::ostringstream os;
            os << "bar dims vs invariant pattern for i <= " << cap << ": (";
            for (size_t i = 0; i < dims.size(); ++i)
                os << (i ? "," : "") << dims[i];
            os << ")";
            run.checks.push_back(
                CheckResult{"twisted line oracle (p=" + std::to_string(p) + ",q=" +
                                std::to_string(q) + ",eps=" + (eps > 0 ? "+1" : "-1") +
                                ")",
                            ok, os.str(), 2});
        }
    }
}

struct TableCase {
    Family family;
    long long p;
    long long q; // 0 when the family determines it
    Orientation orientation;
    long long sphere_expected;
    long long euclidean_expected;
};

const std::vector<TableCase>& table_cases() {
    static const std::vector<TableCase> cases{
        {Family::metacyclic, 7, 3, Orientation::any, 5, 6},
        {Family::metacyclic, 5, 4, Orientation::preserving, 4, 5},
        {Family::metacyclic, 5, 4, Orientation::any, 3, 4},
        {Family::metacyclic, 3, 2, Orientation::any, 1, 2},
        {Family::psl2, 5, 0, Orientation::any, 2, 3},
        {Family::psl2, 7, 0, Orientation::any, 5, 6},
        {Family::psl2, 11, 0, Orientation::any, 9, 10},
        {Family::psl2, 13, 0, Orientation::any, 6, 7},
        {Family::symmetric, 3, 0, Orientation::any, 1, 2},
        {Family::symmetric, 5, 0, Orientation::any, 3, 4},
        {Family::symmetric, 7, 0, Orientation::any, 5, 6},
        {Family::alternating, 7, 0, Orientation::any, 5, 6},
    };
    return cases;
}

std::string case_label(const TableCase& c) {
    std::ostringstream os;
    os << to_string(c.family) << " p=" << c.p;
    if (c.q)
        os << " q=" << c.q;
    os << " (" << to_string(c.orientation) << ")";
    return os.str();
}

void check_tables(VerificationRun& run, const VerificationOptions& options) {
    for (const auto& c : table_cases()) {
        if (options.family_filter && *options.family_filter != c.family)
            continue;
        if (!options.p_filter.empty() &&
            std::find(options.p_filter.begin(), options.p_filter.end(), c.p) ==
                options.p_filter.end())
            continue;
        Setting sphere_setting{Space::sphere, c.orientation,
                               HomologyVariant::mod_p_sphere};
        Setting euclid_setting{Space::euclidean, c.orientation,
                               HomologyVariant::mod_p_acyclic};
        const DimensionReport sphere_report =
            minimal_action_dim(c.family, c.p, c.q, sphere_setting, options.tables);
        const DimensionReport euclid_report =
            minimal_action_dim(c.family, c.p, c.q, euclid_setting, options.tables);
        run.reports.push_back(sphere_report);
        run.reports.push_back(euclid_report);
        {
            const bool ok = sphere_report.match.value_or(false) &&
                            sphere_report.lower_bound == c.sphere_expected &&
                            sphere_report.upper_bound == c.sphere_expected;
            std::ostringstream os;
            os << "lower " << sphere_report.lower_bound << ", upper "
               << sphere_report.upper_bound << ", expected " << c.sphere_expected;
            run.checks.push_back(
                CheckResult{"sphere minimum " + case_label(c), ok, os.str(), 4});
        }
        {
            const bool ok = euclid_report.match.value_or(false) &&
                            euclid_report.lower_bound == c.euclidean_expected &&
                            euclid_report.upper_bound == c.euclidean_expected &&
                            euclid_report.lower_bound ==
                                sphere_report.lower_bound + 1;
            std::ostringstream os;
            os << "lower " << euclid_report.lower_bound << ", upper "
               << euclid_report.upper_bound << ", expected " << c.euclidean_expected
               << " = sphere + 1";
            run.checks.push_back(
                CheckResult{"euclidean minimum " + case_label(c), ok, os.str(), 5});
        }
    }
}

long long table_degree_count(const CharacterTable& t, long long degree, int fs,
                             bool any_fs) {
    long long n = 0;
    for (const auto& chi : t.irreducibles)
        if (chi.degree == degree && (any_fs || chi.fs_indicator == fs))
            ++n;
    return n;
}

bool involution_identity_holds(const CharacterTable& t) {
    long long sum = 0;
    for (const auto& chi : t.irreducibles)
        sum += chi.fs_indicator * chi.degree;
    return sum == t.involution_count();
}

void check_characters(VerificationRun& run, const TableSource& tables) {
    {
        const CharacterTable t = tables(psl2(7));
        std::vector<long long> degrees;
        for (const auto& chi : t.irreducibles)
            degrees.push_back(chi.degree);
        std::sort(degrees.begin(), degrees.end());
        const bool ok = degrees == std::vector<long long>{1, 3, 3, 6, 7, 8} &&
                        table_degree_count(t, 3, 0, false) == 2;
        run.checks.push_back(CheckResult{
            "PSL(2,7) degrees {1,3,3,6,7,8} with two complex degree-3 characters",
            ok, "", 6});
    }
    {
        const CharacterTable t = tables(alternating_group(5));
        std::vector<long long> degrees;
        bool all_real = true;
        for (const auto& chi : t.irreducibles) {
            degrees.push_back(chi.degree);
            if (chi.fs_indicator != 1)
                all_real = false;
        }
        std::sort(degrees.begin(), degrees.end());
        const bool ok = degrees == std::vector<long long>{1, 3, 3, 4, 5} && all_real;
        run.checks.push_back(CheckResult{
            "A_5 degrees {1,3,3,4,5}, all real type", ok, "", 6});
    }
    {
        bool ok = true;
        std::ostringstream os;
        int n_tables = 0;
        auto check_group = [&](const FiniteGroup& G, const std::string& label) {
            ++n_tables;
            if (!involution_identity_holds(tables(G))) {
                ok = false;
                os << " failed for " << label;
            }
        };
        check_group(symmetric_group(3), "S_3");
        check_group(symmetric_group(5), "S_5");
        check_group(symmetric_group(7), "S_7");
        check_group(alternating_group(5), "A_5");
        check_group(alternating_group(7), "A_7");
        for (long long p : {5, 7, 11, 13})
            check_group(psl2(p), "PSL(2," + std::to_string(p) + ")");
        check_group(metacyclic_group(metacyclic_params(7, 3)), "metacyclic(7,3)");
        check_group(metacyclic_group(metacyclic_params(5, 4)), "metacyclic(5,4)");
        run.checks.push_back(CheckResult{
            "involution-count identity sum fs(chi) chi(1) = #{g : g^2 = 1}", ok,
            std::to_string(n_tables) + " tables" + os.str(), 6});
    }
}

void check_prop4_atlas(VerificationRun& run, const std::filesystem::path& facts_path) {
    {
        bool ok = true;
        for (long long k = 1; k <= 10; ++k) {
            for (long long p : {3, 5}) {
                Setting sphere{Space::sphere, Orientation::any,
                               HomologyVariant::mod_p_sphere};
                Setting acyclic{Space::euclidean, Orientation::any,
                                HomologyVariant::mod_p_acyclic};
                if (elementary_abelian_min_dim(p, k, sphere) != 2 * k - 1 ||
                    elementary_abelian_min_dim(p, k, acyclic) != 2 * k)
                    ok = false;
            }
            Setting s_any{Space::sphere, Orientation::any,
                          HomologyVariant::mod_p_sphere};
            Setting a_any{Space::euclidean, Orientation::any,
                          HomologyVariant::mod_p_acyclic};
            Setting s_pre{Space::sphere, Orientation::preserving,
                          HomologyVariant::mod_p_sphere};
            Setting a_pre{Space::euclidean, Orientation::preserving,
                          HomologyVariant::mod_p_acyclic};
            if (elementary_abelian_min_dim(2, k, s_any) != k - 1 ||
                elementary_abelian_min_dim(2, k, a_any) != k ||
                elementary_abelian_min_dim(2, k, s_pre) != k ||
                elementary_abelian_min_dim(2, k, a_pre) != k + 1)
                ok = false;
        }
        run.checks.push_back(CheckResult{
            "elementary abelian minima: 2k-1 / k-1 / k (acyclic 2k / k / k+1)", ok,
            "k <= 10, p in {2,3,5}", 7});
    }
    const auto facts = load_atlas_facts(facts_path);
    for (const auto& entry : facts) {
        const DimensionReport report = atlas_check(entry);
        run.reports.push_back(report);
        std::ostringstream os;
        os << "subgroup (Z_" << entry.subgroup_p << ")^" << entry.subgroup_k
           << " forces >= " << report.lower_bound << ", linear action on S^"
           << entry.claimed_sphere_dim;
        run.checks.push_back(CheckResult{"subgroup-facts check " + entry.name,
                                         report.match.value_or(false), os.str(), 7});
    }
}

} // namespace

VerificationRun run_verification(const VerificationOptions& options) {
    VerificationRun run;
    const bool restricted =
        options.family_filter.has_value() || !options.p_filter.empty();
    if (!restricted) {
        check_patterns(run);
        check_bar(run, options.bar_budget);
        check_spectral(run);
    }
    check_tables(run, options);
    if (!restricted) {
        check_characters(run, options.tables);
        check_prop4_atlas(run, options.facts_path);
    }
    return run;
}

} // namespace minact
