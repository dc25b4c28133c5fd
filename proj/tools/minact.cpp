#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "minact/report_json.hpp"
#include "minact/verification.hpp"

namespace {

using namespace minact;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

struct CommonOptions {
    std::vector<long long> p_values;
    long long q = 0;
    std::string family;
    std::string space = "sphere";
    std::string orientation = "any";
    std::string format = "ascii";
    std::string cache_dir;
    std::string facts_path;
    std::string out_path;
    long long budget_group = kDefaultGroupBudget;
    long long budget_bar = kDefaultBarBudget;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--p", opt.p_values, "prime parameter(s)");
    cmd->add_option("--q", opt.q, "metacyclic twist order q (divides p-1)");
    cmd->add_option("--family", opt.family,
                    "metacyclic | psl2 | symmetric | alternating");
    cmd->add_option("--space", opt.space, "sphere | euclidean")
        ->check(CLI::IsMember({"sphere", "euclidean"}));
    cmd->add_option("--orientation", opt.orientation, "any | preserving")
        ->check(CLI::IsMember({"any", "preserving"}));
    cmd->add_option("--format", opt.format, "ascii | json | csv")
        ->check(CLI::IsMember({"ascii", "json", "csv"}));
    cmd->add_option("--cache-dir", opt.cache_dir,
                    "character table cache directory (default $MINACT_CACHE_DIR "
                    "or .minact-cache; empty string disables)");
    cmd->add_option("--facts", opt.facts_path, "subgroup facts JSON file");
    cmd->add_option("--out", opt.out_path, "write output to a file");
    cmd->add_option("--budget-group", opt.budget_group,
                    "group enumeration budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget-bar", opt.budget_bar,
                    "bar-resolution budget (|G|^(i+1) * dim M)")
        ->check(CLI::PositiveNumber);
}

std::filesystem::path resolve_cache_dir(const CommonOptions& opt, bool flag_given) {
    if (flag_given)
        return opt.cache_dir; // possibly empty = disabled
    if (const char* env = std::getenv("MINACT_CACHE_DIR"))
        return env;
    return ".minact-cache";
}

std::filesystem::path resolve_facts_path(const CommonOptions& opt) {
    if (!opt.facts_path.empty())
        return opt.facts_path;
#ifdef MINACT_DATA_DIR
    return std::filesystem::path(MINACT_DATA_DIR) / "atlas_facts.json";
#else
    return "data/atlas_facts.json";
#endif
}

void emit(const CommonOptions& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << "\n";
    } else {
        std::ofstream out(opt.out_path);
        out << text;
    }
}

std::string reports_ascii(const std::vector<DimensionReport>& reports) {
    std::ostringstream os;
    os << "family        p   q   space      orientation  lower  upper  match\n";
    for (const auto& r : reports) {
        std::ostringstream fam;
        fam << r.family;
        os << fam.str();
        for (size_t i = fam.str().size(); i < 14; ++i)
            os << ' ';
        std::string qs = r.q ? std::to_string(r.q) : "-";
        os << r.p << (r.p < 10 ? "   " : "  ") << qs
           << std::string(4 - qs.size(), ' ') << to_string(r.space)
           << (r.space == Space::sphere ? "     " : "  ")
           << to_string(r.orientation)
           << (r.orientation == Orientation::any ? "          " : "   ")
           << r.lower_bound << "      " << r.upper_bound << "      "
           << (r.match.has_value() ? (*r.match ? "yes" : "NO") : "undetermined");
        if (!r.note.empty())
            os << "  (" << r.note << ")";
        os << "\n";
    }
    return os.str();
}

int run_verify(const CommonOptions& opt, bool cache_flag_given) {
    VerificationOptions vopt;
    if (!opt.family.empty())
        vopt.family_filter = family_from_string(opt.family);
    vopt.p_filter = opt.p_values;
    vopt.bar_budget = opt.budget_bar;
    vopt.tables.cache_dir = resolve_cache_dir(opt, cache_flag_given);
    vopt.tables.group_budget = opt.budget_group;
    vopt.facts_path = resolve_facts_path(opt);

    const VerificationRun run = run_verification(vopt);

    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["command"] = "verify";
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& c : run.checks) {
            nlohmann::ordered_json e;
            e["name"] = c.name;
            e["passed"] = c.passed;
            e["detail"] = c.detail;
            checks.push_back(std::move(e));
        }
        j["checks"] = checks;
        nlohmann::ordered_json reports = nlohmann::ordered_json::array();
        for (const auto& r : run.reports)
            reports.push_back(report_to_json(r));
        j["reports"] = reports;
        emit(opt, j.dump(2));
    } else {
        std::ostringstream os;
        for (const auto& c : run.checks) {
            os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
            if (!c.detail.empty())
                os << " -- " << c.detail;
            os << "\n";
        }
        size_t passed = 0;
        for (const auto& c : run.checks)
            if (c.passed)
                ++passed;
        os << passed << "/" << run.checks.size() << " checks passed\n";
        emit(opt, os.str());
    }
    return run.all_passed() ? kExitOk : kExitVerificationFailed;
}

int run_mindim(const CommonOptions& opt, bool cache_flag_given) {
    TableSource tables{resolve_cache_dir(opt, cache_flag_given), opt.budget_group};
    Setting setting{space_from_string(opt.space),
                    orientation_from_string(opt.orientation),
                    HomologyVariant::mod_p_sphere};

    struct Row {
        Family family;
        long long p;
        long long q;
    };
    std::vector<Row> rows;
    std::vector<Family> families;
    if (!opt.family.empty())
        families.push_back(family_from_string(opt.family));
    else
        families = {Family::metacyclic, Family::psl2, Family::symmetric,
                    Family::alternating};
    for (Family f : families) {
        std::vector<long long> ps = opt.p_values;
        if (ps.empty()) {
            switch (f) {
            case Family::metacyclic:
                ps = {3, 5, 7, 11, 13};
                break;
            case Family::psl2:
                ps = {5, 7, 11, 13};
                break;
            case Family::symmetric:
                ps = {3, 5, 7};
                break;
            case Family::alternating:
                ps = {7};
                break;
            }
        }
        for (long long p : ps) {
            if (f == Family::metacyclic) {
                std::vector<long long> qs;
                if (opt.q)
                    qs = {opt.q};
                else
                    for (long long q = 2; q <= p - 1; ++q)
                        if ((p - 1) % q == 0)
                            qs.push_back(q);
                for (long long q : qs)
                    rows.push_back(Row{f, p, q});
            } else {
                rows.push_back(Row{f, p, 0});
            }
        }
    }

    std::vector<DimensionReport> reports;
    for (const auto& row : rows)
        reports.push_back(
            minimal_action_dim(row.family, row.p, row.q, setting, tables));

    if (opt.format == "json")
        emit(opt, reports_to_json_text(reports, "mindim"));
    else if (opt.format == "csv")
        emit(opt, reports_to_csv(reports));
    else
        emit(opt, reports_ascii(reports));
    return kExitOk;
}

FiniteGroup build_group(const CommonOptions& opt) {
    if (opt.family.empty())
        throw InvalidParams("--family is required");
    const Family family = family_from_string(opt.family);
    if (opt.p_values.size() != 1)
        throw InvalidParams("exactly one --p is required");
    const long long p = opt.p_values[0];
    switch (family) {
    case Family::metacyclic:
        if (!opt.q)
            throw InvalidParams("--q is required for the metacyclic family");
        return metacyclic_group(metacyclic_params(p, opt.q), opt.budget_group);
    case Family::psl2:
        return psl2(p, opt.budget_group);
    case Family::symmetric:
        return symmetric_group(static_cast<int>(p), opt.budget_group);
    case Family::alternating:
        return alternating_group(static_cast<int>(p), opt.budget_group);
    }
    throw InvalidParams("unknown family");
}

int run_chartable(const CommonOptions& opt, bool cache_flag_given) {
    const FiniteGroup G = build_group(opt);
    TableSource tables{resolve_cache_dir(opt, cache_flag_given), opt.budget_group};
    const CharacterTable t = tables(G);

    if (opt.format == "json") {
        emit(opt, table_to_json(t));
        return kExitOk;
    }
    std::ostringstream os;
    os << "group of order " << t.group_order << ", " << t.class_count()
       << " conjugacy classes, exponent " << t.group_exponent << "\n";
    os << "classes (order, size):";
    for (int k = 0; k < t.class_count(); ++k)
        os << " (" << t.class_orders[static_cast<size_t>(k)] << ","
           << t.class_sizes[static_cast<size_t>(k)] << ")";
    os << "\n";
    for (size_t i = 0; i < t.irreducibles.size(); ++i) {
        const auto& chi = t.irreducibles[i];
        os << "chi_" << i << " (degree " << chi.degree << ", fs "
           << (chi.fs_indicator > 0 ? "+1" : chi.fs_indicator < 0 ? "-1" : " 0")
           << "):";
        for (const auto& v : chi.values)
            os << "  " << v.to_string();
        os << "\n";
    }
    emit(opt, os.str());
    return kExitOk;
}

int run_cohomology(const CommonOptions& opt, int eps, long long imax) {
    if (opt.p_values.size() != 1 || !opt.q)
        throw InvalidParams("cohomology requires one --p and --q");
    const TwistedModuleSpec spec = twisted_module_spec(opt.p_values[0], opt.q, eps);
    std::ostringstream os;
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["command"] = "cohomology";
        j["p"] = spec.p;
        j["q"] = spec.q;
        j["eps"] = spec.eps;
        j["k"] = spec.k.value;
        nlohmann::ordered_json dims = nlohmann::ordered_json::array();
        nlohmann::ordered_json nonzero = nlohmann::ordered_json::array();
        for (long long i = 0; i <= imax; ++i) {
            dims.push_back(invariant_dim(i, spec));
            if (invariant_dim(i, spec))
                nonzero.push_back(i);
        }
        j["dims"] = dims;
        j["nonzero_degrees"] = nonzero;
        os << j.dump(2);
    } else {
        os << "H^i(Z_" << spec.p << "; Z_" << spec.p << "(eps=" << (eps > 0 ? "+1" : "-1")
           << "))^{Z_" << spec.q << "}, k = " << spec.k.value << "\n";
        os << "i:   ";
        for (long long i = 0; i <= imax; ++i)
            os << i % 10 << " ";
        os << "\ndim: ";
        for (long long i = 0; i <= imax; ++i)
            os << (invariant_dim(i, spec) ? "*" : ".") << " ";
        os << "\nnonzero degrees:";
        for (long long i = 0; i <= imax; ++i)
            if (invariant_dim(i, spec))
                os << " " << i;
        os << "\n";
    }
    emit(opt, os.str());
    return kExitOk;
}

int run_spectral(const CommonOptions& opt, int eps, long long n, long long imax) {
    if (opt.p_values.size() != 1 || !opt.q)
        throw InvalidParams("spectral requires one --p and --q");
    const TwoRowPage page = make_two_row_page(n, opt.p_values[0], opt.q, eps);
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["command"] = "spectral";
        j["n"] = n;
        j["p"] = opt.p_values[0];
        j["q"] = opt.q;
        j["eps"] = eps;
        j["admissible"] = admissible(n, opt.p_values[0], opt.q, eps);
        j["closed_form"] = admissible_closed_form(n, opt.q, eps);
        emit(opt, j.dump(2));
    } else {
        emit(opt, render_e2_page(page, imax));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "minact: minimal dimensions of faithful group actions on mod-p homology "
        "spheres and Euclidean spaces, verified against minimal faithful real "
        "representations"};
    app.require_subcommand(1);

    CommonOptions o_verify, o_mindim, o_chartable, o_cohomology, o_spectral;
    int eps_cohomology = 1, eps_spectral = 1;
    long long imax_cohomology = 12, imax_spectral = 24, n_spectral = 1;

    CLI::App* c_verify = app.add_subcommand(
        "verify", "run the full verification matrix (or a filtered slice)");
    add_common_flags(c_verify, o_verify);
    CLI::App* c_mindim = app.add_subcommand(
        "mindim", "tabulate lower/upper minimal dimensions per family");
    add_common_flags(c_mindim, o_mindim);
    CLI::App* c_chartable =
        app.add_subcommand("chartable", "print an exact character table");
    add_common_flags(c_chartable, o_chartable);
    CLI::App* c_cohomology = app.add_subcommand(
        "cohomology", "invariant pattern strip for H^*(Z_p; Z_p(eps))^{Z_q}");
    add_common_flags(c_cohomology, o_cohomology);
    c_cohomology->add_option("--eps", eps_cohomology, "+1 or -1")
        ->check(CLI::IsMember({1, -1}));
    c_cohomology->add_option("--imax", imax_cohomology, "largest degree shown");
    CLI::App* c_spectral = app.add_subcommand(
        "spectral", "two-row E_2 page and the d_{n+1} matching verdict");
    add_common_flags(c_spectral, o_spectral);
    c_spectral->add_option("--eps", eps_spectral, "+1 or -1")
        ->check(CLI::IsMember({1, -1}));
    c_spectral->add_option("--n", n_spectral, "top row degree")->required();
    c_spectral->add_option("--imax", imax_spectral, "largest column shown");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_verify->parsed())
            return run_verify(o_verify, c_verify->count("--cache-dir") > 0);
        if (c_mindim->parsed())
            return run_mindim(o_mindim, c_mindim->count("--cache-dir") > 0);
        if (c_chartable->parsed())
            return run_chartable(o_chartable, c_chartable->count("--cache-dir") > 0);
        if (c_cohomology->parsed())
            return run_cohomology(o_cohomology, eps_cohomology, imax_cohomology);
        if (c_spectral->parsed())
            return run_spectral(o_spectral, eps_spectral, n_spectral, imax_spectral);
    } catch (const TooLarge& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const InvalidParams& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OrderDoesNotDivide& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitUsage;
}
