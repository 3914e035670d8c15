#include "ftqc/scenario.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ftqc {

namespace {

using nlohmann::json;

Scenario femoco_preset() {
    Scenario s;
    s.name = "femoco";
    s.logical.logical_qubits = 2196;
    s.logical.toffoli_count = 6'700'000'000ull;
    // The published logical requirements omit the measurement depth; supply a
    // depth or depth fraction at estimate time.
    s.notes = "FeMoco ground-state energy via THC qubitization (logical counts from Lee et al. 2021)";
    return s;
}

Scenario bitcoin_preset() {
    Scenario s;
    s.name = "bitcoin-ec256";
    s.logical.logical_qubits = 2871;
    s.logical.t_count = 5'760'000'000ull;
    s.logical.measurement_depth = 18'800'000ull;
    s.notes = "256-bit elliptic-curve discrete log, depth-optimized circuit (logical counts from Haner et al. 2020)";
    return s;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError(where + ": " + what);
}

void reject_unknown_fields(const json& obj, const std::string& where,
                           std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        bool known = false;
        for (const char* name : allowed) {
            if (key == name) {
                known = true;
                break;
            }
        }
        if (!known) {
            fail(where, "unknown field '" + key + "'");
        }
    }
}

double get_number(const json& obj, const std::string& where, const char* key) {
    if (!obj.at(key).is_number()) {
        fail(where, std::string("field '") + key + "' must be a number");
    }
    return obj.at(key).get<double>();
}

std::uint64_t get_count(const json& obj, const std::string& where, const char* key) {
    const double value = get_number(obj, where, key);
    if (value < 0.0 || value != std::floor(value) || value > 1.8e19) {
        fail(where, std::string("field '") + key + "' must be a non-negative integer");
    }
    return static_cast<std::uint64_t>(value);
}

json parse_file(const std::string& path, std::string& text_out) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError(path + ": cannot open file");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    text_out = buffer.str();
    try {
        return json::parse(text_out);
    } catch (const json::parse_error& e) {
        // Report the line, which is more useful than the byte offset.
        std::size_t line = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text_out.size(); ++i) {
            if (text_out[i] == '\n') {
                ++line;
            }
        }
        std::ostringstream msg;
        msg << path << ":" << line << ": " << e.what();
        throw ValidationError(msg.str());
    }
}

void require_version(const json& doc, const std::string& path) {
    if (!doc.is_object()) {
        fail(path, "top level must be an object");
    }
    if (!doc.contains("version")) {
        fail(path, "missing required field 'version'");
    }
    if (!doc.at("version").is_number_integer() || doc.at("version").get<int>() != 1) {
        fail(path, "unsupported version (expected 1)");
    }
}

Scenario scenario_from_file(const std::string& path) {
    std::string text;
    const json doc = parse_file(path, text);
    require_version(doc, path);
    reject_unknown_fields(doc, path, {"version", "name", "logical", "budget", "notes"});

    Scenario s;
    s.name = doc.value("name", path);
    if (!doc.contains("logical") || !doc.at("logical").is_object()) {
        fail(path, "missing required object 'logical'");
    }

    const json& logical = doc.at("logical");
    const std::string lwhere = path + ": logical";
    reject_unknown_fields(logical, lwhere,
                          {"logical_qubits", "toffoli_count", "t_count", "measurement_depth",
                           "depth_fraction"});
    if (!logical.contains("logical_qubits")) {
        fail(lwhere, "missing required field 'logical_qubits'");
    }
    s.logical.logical_qubits = get_count(logical, lwhere, "logical_qubits");
    if (logical.contains("toffoli_count")) {
        s.logical.toffoli_count = get_count(logical, lwhere, "toffoli_count");
    }
    if (logical.contains("t_count")) {
        s.logical.t_count = get_count(logical, lwhere, "t_count");
    }
    if (logical.contains("measurement_depth")) {
        s.logical.measurement_depth = get_count(logical, lwhere, "measurement_depth");
    }
    if (logical.contains("depth_fraction")) {
        s.logical.depth_fraction = get_number(logical, lwhere, "depth_fraction");
    }

    if (doc.contains("budget")) {
        const json& b = doc.at("budget");
        const std::string bwhere = path + ": budget";
        if (!b.is_object()) {
            fail(bwhere, "must be an object");
        }
        reject_unknown_fields(b, bwhere, {"topological", "distillation"});
        if (b.contains("topological")) {
            s.budget.topological = get_number(b, bwhere, "topological");
        }
        if (b.contains("distillation")) {
            s.budget.distillation = get_number(b, bwhere, "distillation");
        }
    }
    if (doc.contains("notes")) {
        if (!doc.at("notes").is_string()) {
            fail(path, "field 'notes' must be a string");
        }
        s.notes = doc.at("notes").get<std::string>();
    }

    s.budget.validate();
    s.logical.validate();
    return s;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"femoco", "bitcoin-ec256"};
}

Scenario load_scenario(const std::string& name_or_path) {
    if (name_or_path == "femoco") {
        return femoco_preset();
    }
    if (name_or_path == "bitcoin-ec256") {
        return bitcoin_preset();
    }
    if (name_or_path.find('.') == std::string::npos &&
        name_or_path.find('/') == std::string::npos) {
        throw ValidationError("unknown preset '" + name_or_path +
                              "' (available: femoco, bitcoin-ec256); paths must name a file");
    }
    return scenario_from_file(name_or_path);
}

FactoryConstants load_model_config(const std::string& path) {
    std::string text;
    const json doc = parse_file(path, text);
    require_version(doc, path);
    reject_unknown_fields(doc, path,
                          {"version", "distance_grid", "footprint_multiplier", "autoccz",
                           "t_factory", "distillation"});

    FactoryConstants fc;
    if (doc.contains("distance_grid")) {
        const json& g = doc.at("distance_grid");
        const std::string where = path + ": distance_grid";
        reject_unknown_fields(g, where, {"min", "max"});
        if (g.contains("min")) {
            fc.grid_d_min = static_cast<int>(get_count(g, where, "min"));
        }
        if (g.contains("max")) {
            fc.grid_d_max = static_cast<int>(get_count(g, where, "max"));
        }
    }
    if (doc.contains("footprint_multiplier")) {
        fc.footprint_multiplier = get_number(doc, path, "footprint_multiplier");
    }
    if (doc.contains("autoccz")) {
        const json& a = doc.at("autoccz");
        const std::string where = path + ": autoccz";
        reject_unknown_fields(a, where,
                              {"footprint_tiles", "duration_per_d2", "level1_tiles",
                               "level1_duration_per_d1"});
        if (a.contains("footprint_tiles")) {
            fc.autoccz_footprint_tiles = get_number(a, where, "footprint_tiles");
        }
        if (a.contains("duration_per_d2")) {
            fc.autoccz_duration_per_d2 = get_number(a, where, "duration_per_d2");
        }
        if (a.contains("level1_tiles")) {
            fc.autoccz_level1_tiles = get_number(a, where, "level1_tiles");
        }
        if (a.contains("level1_duration_per_d1")) {
            fc.autoccz_level1_duration_per_d1 = get_number(a, where, "level1_duration_per_d1");
        }
    }
    if (doc.contains("t_factory")) {
        const json& t = doc.at("t_factory");
        const std::string where = path + ": t_factory";
        reject_unknown_fields(t, where, {"tiles", "duration_per_d", "max_levels"});
        if (t.contains("tiles")) {
            fc.t_factory_tiles = get_number(t, where, "tiles");
        }
        if (t.contains("duration_per_d")) {
            fc.t_factory_duration_per_d = get_number(t, where, "duration_per_d");
        }
        if (t.contains("max_levels")) {
            fc.t_factory_max_levels = static_cast<int>(get_count(t, where, "max_levels"));
        }
    }
    if (doc.contains("distillation")) {
        const json& d = doc.at("distillation");
        const std::string where = path + ": distillation";
        reject_unknown_fields(d, where, {"t_coeff", "ccz_pair_coeff"});
        if (d.contains("t_coeff")) {
            fc.t_distillation_coeff = get_number(d, where, "t_coeff");
        }
        if (d.contains("ccz_pair_coeff")) {
            fc.ccz_combine_coeff = get_number(d, where, "ccz_pair_coeff");
        }
    }

    fc.validate();
    return fc;
}

FactoryConstants model_config_from_env() {
    const char* path = std::getenv("FTQC_MODEL_CONFIG");
    if (path == nullptr || *path == '\0') {
        return FactoryConstants{};
    }
    return load_model_config(path);
}

double parse_duration_s(const std::string& text) {
    if (text.empty()) {
        throw ValidationError("empty duration");
    }
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw ValidationError("cannot parse duration '" + text + "'");
    }
    std::string suffix = text.substr(pos);
    if (suffix.empty() || suffix == "s") {
        return value;
    }
    if (suffix == "us") {
        return value * 1e-6;
    }
    if (suffix == "ms") {
        return value * 1e-3;
    }
    if (suffix == "h") {
        return value * 3600.0;
    }
    if (suffix == "day" || suffix == "days") {
        return value * 86400.0;
    }
    throw ValidationError("unknown duration suffix '" + suffix + "' (use us, ms, s, h, day)");
}

}  // namespace ftqc
