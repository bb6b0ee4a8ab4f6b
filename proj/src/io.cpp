#include "coarse/io.hpp"

#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

namespace coarse {
namespace {

using nlohmann::json;

int int_param(const json& params, const char* name) {
    if (!params.contains(name)) throw InputError(std::string("missing parameter '") + name + "'");
    const auto& v = params.at(name);
    if (!v.is_number_integer()) throw InputError(std::string("parameter '") + name + "' must be an integer");
    return v.get<int>();
}

// Integer suffix of kinds like "grid-2"; nullopt if the kind is just the stem.
std::optional<int> kind_suffix(const std::string& kind, const std::string& stem, const json& params,
                               const char* param) {
    if (kind == stem) return int_param(params, param);
    const std::string prefix = stem + "-";
    if (kind.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string digits = kind.substr(prefix.size());
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) throw InputError("bad space kind '" + kind + "'");
    return value;
}

std::int64_t parse_int(const std::string& text, const std::string& what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw InputError("bad " + what + " '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

bool numeric_list(const std::string& text) {
    return !text.empty() && text.find_first_not_of("-+0123456789,") == std::string::npos;
}

VertexRay geodesic_spec(const SpacePtr& space, const std::string& pattern, std::int64_t length) {
    switch (space->kind()) {
        case SpaceKind::Staircase:
            if (pattern == "L") return staircase_alpha(length);
            if (pattern == "R") return staircase_alpha_prime(length);
            throw InputError("staircase rays are 'L' or 'R'");
        case SpaceKind::HairyTree:
            return hair_ray(TreeOracle(space), static_cast<std::int32_t>(parse_int(pattern, "hair index")), length);
        case SpaceKind::Grid: {
            std::vector<std::int32_t> dir;
            for (const auto& c : split(pattern, ',')) dir.push_back(static_cast<std::int32_t>(parse_int(c, "direction")));
            if (dir.size() != space->basepoint().key.size()) throw InputError("direction has the wrong dimension");
            auto at = [dir](std::int64_t t) {
                VertexId v;
                for (auto d : dir) v.key.push_back(static_cast<std::int32_t>(d * t));
                return v;
            };
            std::vector<VertexId> v;
            for (std::int64_t t = 0; t <= length; ++t) v.push_back(at(t));
            return VertexRay(std::move(v), at);
        }
        default:
            break;
    }
    std::vector<std::int32_t> steps;
    if (numeric_list(pattern)) {
        for (const auto& c : split(pattern, ',')) steps.push_back(static_cast<std::int32_t>(parse_int(c, "ray step")));
    } else {
        steps = space->parse(pattern).key;
    }
    return periodic_geodesic_ray(*space, steps, length);
}

}  // namespace

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

SpacePtr build_space(const json& spec) {
    if (!spec.is_object() || !spec.contains("kind") || !spec.at("kind").is_string()) {
        throw InputError("space spec needs a string 'kind'");
    }
    const std::string kind = spec.at("kind").get<std::string>();
    const json params = spec.value("params", json::object());
    if (!params.is_object()) throw InputError("'params' must be an object");
    const Radius horizon = params.contains("horizon") ? int_param(params, "horizon") : kUnboundedHorizon;
    if (horizon < 0) throw InputError("horizon must be non-negative");

    try {
        if (kind == "line") return make_line(horizon);
        if (kind == "halfline") return make_halfline(horizon);
        if (auto n = kind_suffix(kind, "grid", params, "n")) return make_grid(*n, horizon);
        if (auto d = kind_suffix(kind, "regular-tree", params, "degree")) return make_regular_tree(*d, horizon);
        if (auto k = kind_suffix(kind, "free-group-rank", params, "rank")) return make_free_group(*k, horizon);
        if (kind == "free-group") return make_free_group(int_param(params, "rank"), horizon);
        if (kind == "staircase") {
            const std::string rule = params.value("step_rule", std::string("squared"));
            if (rule != "squared" && rule != "constant") throw InputError("step_rule must be squared or constant");
            return make_staircase(int_param(params, "n_max"), rule == "squared" ? StepRule::Squared : StepRule::Constant,
                                  horizon);
        }
        if (kind == "hairy-tree") {
            return make_hairy_tree(params.at("parents").get<std::vector<std::int32_t>>(),
                                   params.value("hairs", std::vector<std::int32_t>{}), horizon);
        }
        if (kind == "finite" || kind == "finite-file") {
            EdgeListOptions options;
            options.horizon = horizon;
            if (params.contains("basepoint")) options.basepoint = params.at("basepoint").get<std::string>();
            if (params.contains("max_degree")) options.max_degree = params.at("max_degree").get<std::size_t>();
            if (kind == "finite-file") {
                const json& holder = spec.contains("path") ? spec : params;
                if (!holder.contains("path")) throw InputError("finite-file needs a 'path'");
                return load_edge_list(holder.at("path").get<std::string>(), options);
            }
            if (params.contains("adjacency")) {
                std::vector<std::pair<std::string, std::vector<std::string>>> adjacency;
                for (const auto& [name, list] : params.at("adjacency").items()) {
                    adjacency.emplace_back(name, list.get<std::vector<std::string>>());
                }
                return make_finite_adjacency(adjacency, options);
            }
            if (!params.contains("edges")) throw InputError("finite spaces need 'edges' or 'adjacency'");
            return make_finite(params.at("edges").get<std::vector<std::pair<std::string, std::string>>>(), options);
        }
    } catch (const json::exception& e) {
        throw InputError("bad parameters for '" + kind + "': " + e.what());
    }
    throw InputError("unknown space kind '" + kind + "'");
}

VertexRay parse_ray_spec(const SpacePtr& space, const std::string& spec, std::int64_t length, std::uint64_t seed) {
    if (length < 1) throw InputError("ray length must be positive");
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw InputError("ray spec '" + spec + "' has no scheme");
    const std::string scheme = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);

    if (scheme == "geo") return geodesic_spec(space, rest, length);
    if (scheme == "detour") {
        const auto last = rest.rfind(':');
        if (last == std::string::npos) throw InputError("detour spec needs ':<k>'");
        const TreeOracle tree(space);
        const auto spine = geodesic_spec(space, rest.substr(0, last), length);
        std::mt19937_64 rng(seed);
        return detour_ray(tree, spine, length, static_cast<int>(parse_int(rest.substr(last + 1), "detour bound")), rng);
    }
    if (scheme == "file") {
        std::ifstream in(rest);
        if (!in) throw InputError("cannot open " + rest);
        std::vector<RaySample> samples;
        std::string line;
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            std::istringstream fields(line);
            std::vector<std::string> tokens;
            for (std::string t; fields >> t;) tokens.push_back(t);
            if (tokens.empty()) continue;
            if (tokens.size() > 2) throw InputError("ray file line has too many fields: " + line);
            const std::int64_t index = tokens.size() == 2 ? parse_int(tokens[0], "ray index")
                                                          : static_cast<std::int64_t>(samples.size());
            samples.push_back({index, space->parse(tokens.back())});
        }
        if (samples.empty()) throw InputError(rest + " holds no ray samples");
        return VertexRay::sparse(std::move(samples));
    }
    throw InputError("unknown ray scheme '" + scheme + "'");
}

LatticeHomotopy read_lattice_homotopy(const SpaceOracle& space, const json& doc) {
    if (!doc.contains("rows") || !doc.at("rows").is_array()) throw InputError("homotopy needs a 'rows' array");
    std::vector<std::vector<VertexId>> rows;
    for (const auto& row : doc.at("rows")) {
        std::vector<VertexId> out;
        for (const auto& name : row) out.push_back(space.parse(name.get<std::string>()));
        rows.push_back(std::move(out));
    }
    return LatticeHomotopy(std::move(rows));
}

json lattice_homotopy_json(const SpaceOracle& space, const LatticeHomotopy& phi) {
    json rows = json::array();
    for (std::int64_t h = 0; h <= phi.height(); ++h) rows.push_back(vertices_json(space, phi.row(h)));
    return {{"space", space.spec()}, {"rows", rows}};
}

MapTrace read_map_trace(const json& doc) {
    MapTrace t;
    t.domain = build_space(doc.at("domain"));
    t.codomain = build_space(doc.at("codomain"));
    for (const auto& p : doc.at("pairs")) {
        if (!p.is_array() || p.size() != 2) throw InputError("trace pairs are [input, output]");
        t.pairs.emplace_back(t.domain->parse(p[0].get<std::string>()), t.codomain->parse(p[1].get<std::string>()));
    }
    t.validate();
    return t;
}

json vertices_json(const SpaceOracle& space, const std::vector<VertexId>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(space.format(v));
    return out;
}

json ends_json(const SpaceOracle& space, const EndsProfile& profile, const EndCount& count) {
    json levels = json::array();
    for (const auto& level : profile.levels) {
        json comps = json::array();
        for (const auto& c : level.components) {
            comps.push_back({{"representative", space.format(c.representative)},
                             {"witness", space.format(c.witness)},
                             {"size", c.size}});
        }
        levels.push_back({{"r", level.r}, {"count", level.components.size()}, {"components", comps}});
    }
    json out{{"basepoint", space.format(profile.basepoint)},
             {"horizon", profile.horizon},
             {"counts", profile.counts()},
             {"levels", levels},
             {"growing", count.growing()}};
    out["stabilized"] = count.stabilized ? json(*count.stabilized) : json(nullptr);
    return out;
}

json verdict_json(const SpaceOracle& space, const EndVerdict& verdict) {
    json witnesses = json::array();
    for (const auto& w : verdict.witnesses) {
        json item{{"r", w.r}, {"from_t", w.from_t}, {"to_t", w.to_t}, {"connected", w.connected},
                  {"example_path", vertices_json(space, w.example_path)}};
        item["separating_t"] = w.separating_t ? json(*w.separating_t) : json(nullptr);
        witnesses.push_back(item);
    }
    return {{"relation", to_string(verdict.relation)}, {"witnesses", witnesses}, {"note", verdict.note}};
}

json pi0_json(const SpaceOracle& space, const Pi0Verdict& verdict) {
    json out{{"relation", to_string(verdict.relation)},
             {"compared_height", verdict.compared_height},
             {"note", verdict.note}};
    out["divergence_height"] = verdict.divergence_height ? json(*verdict.divergence_height) : json(nullptr);
    for (const auto& [name, chain] : {std::pair{"first_chain", &verdict.first}, std::pair{"second_chain", &verdict.second}}) {
        out[name] = *chain ? vertices_json(space, (*chain)->vertices) : json(nullptr);
    }
    return out;
}

json cone_json(const ConeReport& report) {
    json out{{"components", report.components},
             {"counts", report.counts},
             {"mesh_points", report.mesh_points},
             {"mesh_ok", report.mesh_ok},
             {"rays_separated", report.rays_separated},
             {"passes", report.passes},
             {"note", report.note}};
    out["ends"] = report.ends.stabilized ? json(*report.ends.stabilized) : json(nullptr);
    return out;
}

json stability_json(const StabilityReport& scan) {
    json rows = json::array();
    for (const auto& row : scan.rows) {
        rows.push_back({{"h", row.h},
                        {"path_length", row.path.size()},
                        {"cross", word_to_string(row.cross)},
                        {"behav", word_to_string(row.behav)},
                        {"clear", row.clear},
                        {"facts", row.behav_facts.all() && row.cross_facts.all()}});
    }
    json out{{"a", scan.a}, {"h_min", scan.h_min}, {"h_max", scan.h_max}, {"rows", rows},
             {"diagnosis", scan.diagnosis}, {"facts_hold", scan.facts_hold}};
    out["threshold"] = scan.threshold ? json(*scan.threshold) : json(nullptr);
    out["stable_word"] = scan.stable ? json(word_to_string(*scan.stable)) : json(nullptr);
    out["disagreement"] = scan.disagreement ? json{scan.disagreement->first, scan.disagreement->second} : json(nullptr);
    return out;
}

json refutation_json(const SpaceOracle& space, const Refutation& ref) {
    json points = json::array();
    for (const auto& p : ref.points) {
        points.push_back({{"h", p.h}, {"path_index", p.path_index}, {"lattice_index", p.lattice_index},
                          {"image", space.format(p.image)}});
    }
    return {{"step", ref.step}, {"points", points}, {"image_diameter", ref.image_diameter},
            {"lattice_spread", ref.lattice_spread}};
}

json control_json(const ControlReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"r", r.r}, {"modulus", r.modulus}, {"by_window", r.by_window}, {"stable", r.stable}});
    }
    return {{"windows", report.windows}, {"rows", rows}, {"controlled_on_trace", report.controlled_on_trace}};
}

json proper_json(const SpaceOracle& codomain, const ProperReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"center", codomain.format(r.ball.center)}, {"radius", r.ball.radius},
                        {"preimage_size", r.preimage_size}, {"diameter", r.diameter},
                        {"by_window", r.by_window}, {"stable", r.stable}});
    }
    return {{"windows", report.windows}, {"rows", rows}, {"proper_on_trace", report.proper_on_trace}};
}

}  // namespace coarse
