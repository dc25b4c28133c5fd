#include "minact/report_json.hpp"

#include <sstream>

namespace minact {

using nlohmann::ordered_json;

ordered_json report_to_json(const DimensionReport& r) {
    ordered_json j;
    j["family"] = r.family;
    j["p"] = r.p;
    j["q"] = r.q;
    j["space"] = to_string(r.space);
    j["orientation"] = to_string(r.orientation);
    j["variant"] = to_string(r.variant);
    j["lower_bound"] = r.lower_bound;
    j["upper_bound"] = r.upper_bound;
    if (r.match.has_value())
        j["match"] = *r.match;
    else
        j["match"] = nullptr;
    j["note"] = r.note;
    j["trace"] = r.trace;
    ordered_json witness = ordered_json::array();
    for (const auto& w : r.witness) {
        ordered_json e;
        e["degree"] = w.degree;
        e["fs_indicator"] = w.fs_indicator;
        e["real_degree"] = w.real_degree;
        e["multiplicity"] = w.multiplicity;
        witness.push_back(std::move(e));
    }
    j["witness"] = witness;
    return j;
}

DimensionReport report_from_json(const ordered_json& j) {
    DimensionReport r;
    r.family = j.at("family").get<std::string>();
    r.p = j.at("p").get<long long>();
    r.q = j.at("q").get<long long>();
    r.space = space_from_string(j.at("space").get<std::string>());
    r.orientation = orientation_from_string(j.at("orientation").get<std::string>());
    r.variant = variant_from_string(j.at("variant").get<std::string>());
    r.lower_bound = j.at("lower_bound").get<long long>();
    r.upper_bound = j.at("upper_bound").get<long long>();
    if (!j.at("match").is_null())
        r.match = j.at("match").get<bool>();
    r.note = j.at("note").get<std::string>();
    r.trace = j.at("trace").get<std::vector<std::string>>();
    for (const auto& e : j.at("witness")) {
        WitnessEntry w;
        w.degree = e.at("degree").get<long long>();
        w.fs_indicator = e.at("fs_indicator").get<int>();
        w.real_degree = e.at("real_degree").get<long long>();
        w.multiplicity = e.at("multiplicity").get<int>();
        r.witness.push_back(w);
    }
    return r;
}

std::string reports_to_json_text(const std::vector<DimensionReport>& reports,
                                 const std::string& command) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    ordered_json list = ordered_json::array();
    for (const auto& r : reports)
        list.push_back(report_to_json(r));
    j["reports"] = list;
    return j.dump(2);
}

std::vector<DimensionReport> reports_from_json_text(const std::string& text) {
    const ordered_json j = ordered_json::parse(text);
    if (j.at("schema").get<int>() != 1)
        throw Error("reports_from_json_text: unsupported schema");
    std::vector<DimensionReport> out;
    for (const auto& r : j.at("reports"))
        out.push_back(report_from_json(r));
    return out;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string reports_to_csv(const std::vector<DimensionReport>& reports) {
    std::ostringstream os;
    os << "family,p,q,space,orientation,lower_bound,upper_bound,match,note\n";
    for (const auto& r : reports) {
        os << csv_escape(r.family) << "," << r.p << "," << r.q << ","
           << to_string(r.space) << "," << to_string(r.orientation) << ","
           << r.lower_bound << "," << r.upper_bound << ","
           << (r.match.has_value() ? (*r.match ? "true" : "false") : "undetermined")
           << "," << csv_escape(r.note) << "\n";
    }
    return os.str();
}

} // namespace minact
