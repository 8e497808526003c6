#include "semiwalk/spec_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace semiwalk {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(std::string("missing \"") + key + "\"");
    return *it;
}

std::vector<std::string> string_list(const Json& j, const char* what) {
    if (!j.is_array()) fail(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const Json& v : j) {
        if (!v.is_string()) fail(std::string(what) + " must be an array of strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::vector<int> int_list(const Json& j, const char* what) {
    if (!j.is_array()) fail(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const Json& v : j) {
        if (!v.is_number_integer()) fail(std::string(what) + " must be an array of integers");
        out.push_back(v.get<int>());
    }
    return out;
}

LoadedSpec from_table(const Json& j, bool checked) {
    const std::vector<std::string> names = string_list(field(j, "generators"), "generators");
    const Json& rows = field(j, "table");
    if (!rows.is_array() || rows.empty()) fail("table must be a non-empty array of rows");
    std::vector<std::vector<int>> table;
    for (const Json& row : rows) table.push_back(int_list(row, "table row"));
    const std::size_t n = table.size();
    for (const auto& row : table) {
        if (row.size() != n) fail("table must be square");
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n) fail("table entry out of range");
    }
    std::vector<int> gens;
    if (j.contains("generator_elements")) {
        gens = int_list(j["generator_elements"], "generator_elements");
    } else {
        for (std::size_t a = 0; a < names.size(); ++a) gens.push_back(static_cast<int>(a));
    }
    if (gens.size() != names.size()) fail("generator_elements and generators differ in length");
    for (int g : gens)
        if (g < 0 || static_cast<std::size_t>(g) >= n) fail("generator element out of range");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = string_list(j["labels"], "labels");
    LoadedSpec out;
    out.semigroup = checked ? Semigroup::from_table(table, gens, names, labels)
                            : Semigroup::from_table_unchecked(table, gens, names, labels);
    return out;
}

LoadedSpec from_transformations(const Json& j) {
    const Json& states = field(j, "states");
    if (!states.is_number_integer()) fail("states must be an integer");
    const Json& maps = field(j, "maps");
    if (!maps.is_object() || maps.empty()) fail("maps must be a non-empty object");
    std::vector<std::string> names;
    std::vector<std::vector<int>> images;
    for (auto it = maps.begin(); it != maps.end(); ++it) {
        names.push_back(it.key());
        images.push_back(int_list(it.value(), "map"));
    }
    LoadedSpec out;
    out.semigroup = Semigroup::from_transformations(states.get<int>(), names, images);
    return out;
}

LoadedSpec from_family(const Json& j) {
    const Json& name = field(j, "family");
    if (!name.is_string()) fail("family must be a string");
    std::string spec = name.get<std::string>();
    if (spec.find(':') == std::string::npos) {
        std::string params;
        for (const char* key : {"n", "p", "depth"}) {
            if (!j.contains(key)) continue;
            if (!j[key].is_number_integer()) fail(std::string(key) + " must be an integer");
            params += (params.empty() ? "" : ",") + std::to_string(j[key].get<int>());
        }
        if (!params.empty()) spec += ":" + params;
    }
    LoadedSpec out;
    out.family = make_family(spec);
    out.semigroup = out.family->semigroup;
    return out;
}

}  // namespace

LoadedSpec parse_spec(std::string_view json_text, bool check_tables) {
    Json j;
    try {
        j = Json::parse(json_text.begin(), json_text.end());
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) fail("specification must be a JSON object");
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) fail("kind must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "table") return from_table(j, check_tables);
    if (k == "transformations") return from_transformations(j);
    if (k == "family") return from_family(j);
    fail("unknown kind '" + k + "'");
}

LoadedSpec load_spec_file(const std::string& path, bool check_tables) {
    std::ifstream in(path);
    if (!in) fail("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str(), check_tables);
}

}  // namespace semiwalk
