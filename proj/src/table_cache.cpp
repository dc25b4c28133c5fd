#include "minact/table_cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace minact {

namespace {

using nlohmann::ordered_json;

ordered_json cyclo_to_json(const CyclotomicInteger& v) {
    ordered_json out;
    out["conductor"] = v.conductor();
    out["coeffs"] = v.coeffs();
    return out;
}

CyclotomicInteger cyclo_from_json(const ordered_json& j) {
    return CyclotomicInteger::from_raw(j.at("conductor").get<long long>(),
                                       j.at("coeffs").get<std::vector<long long>>());
}

} // namespace

std::string table_to_json(const CharacterTable& table) {
    ordered_json j;
    j["schema"] = 1;
    j["group_order"] = table.group_order;
    j["group_exponent"] = table.group_exponent;
    j["group_hash"] = table.group_hash;
    j["class_sizes"] = table.class_sizes;
    j["class_orders"] = table.class_orders;
    j["power_classes"] = table.power_classes;
    ordered_json irr = ordered_json::array();
    for (const auto& chi : table.irreducibles) {
        ordered_json c;
        c["degree"] = chi.degree;
        c["fs_indicator"] = chi.fs_indicator;
        ordered_json values = ordered_json::array();
        for (const auto& v : chi.values)
            values.push_back(cyclo_to_json(v));
        c["values"] = values;
        c["eigen_mults"] = chi.eigen_mults;
        irr.push_back(std::move(c));
    }
    j["irreducibles"] = irr;
    return j.dump(2);
}

CharacterTable table_from_json(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    if (j.at("schema").get<int>() != 1)
        throw Error("table_from_json: unsupported schema");
    CharacterTable table;
    table.group_order = j.at("group_order").get<long long>();
    table.group_exponent = j.at("group_exponent").get<long long>();
    table.group_hash = j.at("group_hash").get<uint64_t>();
    table.class_sizes = j.at("class_sizes").get<std::vector<long long>>();
    table.class_orders = j.at("class_orders").get<std::vector<long long>>();
    table.power_classes = j.at("power_classes").get<std::vector<std::vector<int>>>();
    for (const auto& c : j.at("irreducibles")) {
        Character chi;
        chi.degree = c.at("degree").get<long long>();
        chi.fs_indicator = c.at("fs_indicator").get<int>();
        for (const auto& v : c.at("values"))
            chi.values.push_back(cyclo_from_json(v));
        chi.eigen_mults =
            c.at("eigen_mults").get<std::vector<std::vector<long long>>>();
        chi.kernel_mask = 0;
        for (int k = 0; k < static_cast<int>(table.class_sizes.size()); ++k)
            if (chi.values[static_cast<size_t>(k)] ==
                CyclotomicInteger::integer(chi.degree))
                chi.kernel_mask |= (uint64_t{1} << k);
        table.irreducibles.push_back(std::move(chi));
    }
    return table;
}

std::string table_cache_filename(uint64_t group_hash) {
    std::ostringstream os;
    os << "table_" << std::hex << group_hash << ".json";
    return os.str();
}

namespace {

bool cache_matches_group(const CharacterTable& table, const FiniteGroup& G) {
    if (table.group_hash != G.canonical_hash() || table.group_order != G.order() ||
        table.class_count() != G.class_count())
        return false;
    for (int k = 0; k < G.class_count(); ++k) {
        const auto& cls = G.classes()[static_cast<size_t>(k)];
        if (table.class_sizes[static_cast<size_t>(k)] != cls.size ||
            table.class_orders[static_cast<size_t>(k)] != cls.element_order)
            return false;
    }
    return true;
}

} // namespace

CharacterTable character_table_cached(const FiniteGroup& G,
                                      const std::filesystem::path& cache_dir) {
    if (cache_dir.empty())
        return compute_character_table(G);
    const std::filesystem::path file =
        cache_dir / table_cache_filename(G.canonical_hash());
    if (std::filesystem::exists(file)) {
        try {
            std::ifstream in(file);
            std::stringstream buf;
            buf << in.rdbuf();
            CharacterTable table = table_from_json(buf.str());
            if (cache_matches_group(table, G))
                return table;
        } catch (const std::exception&) {
            // corrupt cache entry: fall through and rebuild
        }
    }
    CharacterTable table = compute_character_table(G);
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    const std::filesystem::path tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        out << table_to_json(table) << "\n";
    }
    std::filesystem::rename(tmp, file, ec);
    return table;
}

} // namespace minact
