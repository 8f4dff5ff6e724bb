#include "rainbow/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace rainbow {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string label_of(const json& value, const std::string& where)
{
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number_integer()) return std::to_string(value.get<long long>());
    throw ParseError(where + ": vertex labels must be strings (got " + std::string(value.type_name()) + ")");
}

std::vector<std::vector<std::string>> label_lists(const json& value, const std::string& key)
{
    if (!value.is_array()) throw ParseError("'" + key + "' must be an array of arrays");
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string where = key + "[" + std::to_string(i) + "]";
        if (!value[i].is_array()) throw ParseError(where + " must be an array of labels");
        std::vector<std::string> list;
        for (std::size_t j = 0; j < value[i].size(); ++j)
            list.push_back(label_of(value[i][j], where + "[" + std::to_string(j) + "]"));
        out.push_back(std::move(list));
    }
    return out;
}

SimplicialComplex build_complex(const std::vector<std::vector<std::string>>& facets, const std::string& unit)
{
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (facets[i].empty()) throw ParseError(unit + " " + std::to_string(i) + ": empty facet");
        std::set<std::string> seen;
        for (const auto& label : facets[i])
            if (!seen.insert(label).second)
                throw ParseError(unit + " " + std::to_string(i) + ": duplicate vertex '" + label + "'");
    }
    return SimplicialComplex::from_facets(facets);
}

void attach_coloring(Instance& inst, std::vector<std::vector<std::string>> classes)
{
    Coloring c(std::move(classes));
    const auto violations = validate_coloring(inst.complex, c);
    std::string errors;
    for (const auto& v : violations) {
        if (v.is_warning())
            inst.warnings.push_back(v.message);
        else
            errors += (errors.empty() ? "" : "; ") + v.message;
    }
    if (!errors.empty()) throw ColoringError("coloring does not partition the vertex set: " + errors);
    inst.coloring = std::move(c);
}

Instance parse_json(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object()) throw ParseError("instance must be a JSON object");
    if (!j.contains("facets")) throw ParseError("instance has no 'facets' member");

    Instance inst;
    if (j.contains("name") && !j["name"].is_null()) {
        if (!j["name"].is_string()) throw ParseError("'name' must be a string");
        inst.name = j["name"].get<std::string>();
    }
    inst.complex = build_complex(label_lists(j["facets"], "facets"), "facets");
    if (inst.complex.empty()) inst.warnings.push_back("instance describes the empty complex");
    if (j.contains("classes") && !j["classes"].is_null()) attach_coloring(inst, label_lists(j["classes"], "classes"));
    return inst;
}

Instance parse_facet_list(const std::string& text)
{
    std::vector<std::vector<std::string>> facets;
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::size_t> line_of;
    while (std::getline(lines, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream words(line);
        std::vector<std::string> facet;
        for (std::string w; words >> w;) facet.push_back(w);
        if (facet.empty()) continue;
        std::set<std::string> seen;
        for (const auto& label : facet)
            if (!seen.insert(label).second)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate vertex '" + label + "'");
        facets.push_back(std::move(facet));
    }
    Instance inst;
    inst.complex = SimplicialComplex::from_facets(facets);
    if (inst.complex.empty()) inst.warnings.push_back("instance describes the empty complex");
    return inst;
}

ordered_json evidence_json(const Evidence& e)
{
    ordered_json j;
    j["subset"] = e.subset;
    j["degree"] = e.degree;
    j["field"] = e.field.empty() ? ordered_json(nullptr) : ordered_json(e.field);
    j["value"] = e.value;
    j["note"] = e.note;
    return j;
}

template <class T>
T member(const json& j, const char* key)
{
    if (!j.contains(key)) throw ParseError(std::string("report is missing '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("report member '") + key + "': " + e.what());
    }
}

std::string optional_string(const json& j, const char* key)
{
    if (!j.contains(key) || j.at(key).is_null()) return {};
    return member<std::string>(j, key);
}

} // namespace

Instance parse_instance_text(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return parse_json(text);
    return parse_facet_list(text);
}

Instance parse_instance(const std::string& path, std::istream& in)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw ParseError("cannot open '" + path + "'");
        buf << file.rdbuf();
    }
    try {
        return parse_instance_text(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string instance_to_json(const SimplicialComplex& K, const std::optional<Coloring>& coloring,
                             const std::optional<std::string>& name)
{
    std::ostringstream os;
    auto list = [](const std::vector<std::string>& labels) { return json(labels).dump(); };
    os << "{\n";
    if (name) os << "  \"name\": " << json(*name).dump() << ",\n";
    os << "  \"facets\": [";
    for (std::size_t i = 0; i < K.facets().size(); ++i)
        os << (i ? ",\n    " : "\n    ") << list(K.labels_of(K.facets()[i]));
    os << (K.facets().empty() ? "]" : "\n  ]");
    if (coloring) {
        os << ",\n  \"classes\": [";
        for (std::size_t i = 0; i < coloring->num_classes(); ++i) {
            auto labels = (*coloring)[i];
            std::sort(labels.begin(), labels.end());
            os << (i ? ",\n    " : "\n    ") << list(labels);
        }
        os << (coloring->num_classes() == 0 ? "]" : "\n  ]");
    }
    os << "\n}\n";
    return os.str();
}

ordered_json report_to_json(const CheckReport& report, std::optional<double> timing_ms)
{
    ordered_json j;
    j["schema"] = "rainbow-check-report";
    j["schema_version"] = k_report_schema_version;
    j["theorem"] = to_string(report.theorem);
    j["fields"] = report.fields;
    j["all_hold"] = report.all_hold;
    j["holding_fields"] = report.holding_fields;
    j["consistent"] = report.consistent;
    ordered_json verdicts = ordered_json::array();
    for (const auto& v : report.verdicts) {
        ordered_json jv;
        jv["id"] = v.id;
        jv["description"] = v.description;
        jv["status"] = to_string(v.status);
        jv["field"] = v.field.empty() ? ordered_json(nullptr) : ordered_json(v.field);
        ordered_json ev = ordered_json::array();
        for (const auto& e : v.evidence) ev.push_back(evidence_json(e));
        jv["evidence"] = std::move(ev);
        verdicts.push_back(std::move(jv));
    }
    j["verdicts"] = std::move(verdicts);
    j["rainbow_witnesses"] = report.rainbow_witnesses;
    j["warnings"] = report.warnings;
    if (report.manifold) {
        const auto& m = *report.manifold;
        j["manifold"] = {{"is_pure", m.is_pure},
                         {"ridge_degrees_ok", m.ridge_degrees_ok},
                         {"is_closed", m.is_closed},
                         {"link_betti_ok", m.link_betti_ok},
                         {"strongly_connected", m.strongly_connected}};
    } else {
        j["manifold"] = nullptr;
    }
    if (timing_ms) j["timing_ms"] = *timing_ms;
    return j;
}

CheckReport report_from_json(const json& j)
{
    if (!j.is_object() || optional_string(j, "schema") != "rainbow-check-report")
        throw ParseError("not a rainbow check report");
    if (member<int>(j, "schema_version") != k_report_schema_version)
        throw ParseError("unsupported report schema version");
    CheckReport r;
    try {
        r.theorem = parse_theorem(member<std::string>(j, "theorem"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    r.fields = member<std::vector<std::string>>(j, "fields");
    r.all_hold = member<bool>(j, "all_hold");
    r.holding_fields = member<std::vector<std::string>>(j, "holding_fields");
    r.consistent = member<bool>(j, "consistent");
    for (const auto& jv : member<json>(j, "verdicts")) {
        HypothesisVerdict v;
        v.id = member<std::string>(jv, "id");
        v.description = member<std::string>(jv, "description");
        try {
            v.status = parse_status(member<std::string>(jv, "status"));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        v.field = optional_string(jv, "field");
        for (const auto& je : member<json>(jv, "evidence")) {
            Evidence e;
            e.subset = member<std::vector<std::size_t>>(je, "subset");
            e.degree = member<int>(je, "degree");
            e.field = optional_string(je, "field");
            e.value = member<long long>(je, "value");
            e.note = member<std::string>(je, "note");
            v.evidence.push_back(std::move(e));
        }
        r.verdicts.push_back(std::move(v));
    }
    r.rainbow_witnesses = member<std::vector<std::vector<std::string>>>(j, "rainbow_witnesses");
    r.warnings = member<std::vector<std::string>>(j, "warnings");
    if (j.contains("manifold") && !j["manifold"].is_null()) {
        const auto& m = j["manifold"];
        PseudomanifoldReport p;
        p.is_pure = member<bool>(m, "is_pure");
        p.ridge_degrees_ok = member<bool>(m, "ridge_degrees_ok");
        p.is_closed = member<bool>(m, "is_closed");
        p.link_betti_ok = member<bool>(m, "link_betti_ok");
        p.strongly_connected = member<bool>(m, "strongly_connected");
        r.manifold = p;
    }
    return r;
}

} // namespace rainbow
