#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coarse/io.hpp"

namespace {

using nlohmann::json;
using namespace coarse;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInconclusive = 3;

json horizon_json(const SpaceOracle& space) {
    if (space.horizon() == kUnboundedHorizon) return nullptr;
    return space.horizon();
}

struct RunConfig {
    std::string command;
    std::string space_path;
    std::string kind;
    int nmax = 200;
    std::string step_rule = "squared";
    Radius rmax = 0;
    Radius horizon = 0;  // 0: the space's suggested horizon
    int k = 1;
    Radius a = 2;
    std::int64_t hmin = 20, hmax = 70;
    std::string ray1, ray2;
    std::int64_t length = 64;
    std::uint64_t seed = 1;
    std::string generator, candidate, endrays;
    int step = 6;
    std::string complex;
    double mesh = 1.0;
    std::string trace;
    std::vector<Radius> radii{1, 2, 4, 8};
    std::vector<Radius> target_radii{1, 2, 4};
    std::string center;
    Radius radius = 3;
    std::string format = "json";
    std::string out;

    json to_json() const {
        return {{"command", command}, {"space", space_path}, {"kind", kind}, {"nmax", nmax},
                {"step_rule", step_rule}, {"rmax", rmax}, {"horizon", horizon}, {"k", k}, {"A", a},
                {"hmin", hmin}, {"hmax", hmax}, {"ray1", ray1}, {"ray2", ray2}, {"length", length},
                {"seed", seed}, {"generator", generator}, {"candidate", candidate}, {"endrays", endrays},
                {"step", step}, {"complex", complex}, {"mesh", mesh}, {"trace", trace}, {"radii", radii},
                {"target_radii", target_radii}, {"center", center}, {"radius", radius}, {"format", format},
                {"out", out}};
    }
};

SpacePtr load_space(const RunConfig& cfg) {
    if (!cfg.space_path.empty()) return build_space(read_json_file(cfg.space_path));
    if (cfg.kind.empty()) throw InputError("give --kind or --space");
    json spec{{"kind", cfg.kind}, {"params", json::object()}};
    if (cfg.kind == "staircase") spec["params"] = {{"n_max", cfg.nmax}, {"step_rule", cfg.step_rule}};
    return build_space(spec);
}

Radius analysis_horizon(const RunConfig& cfg, const SpaceOracle& space) {
    return cfg.horizon > 0 ? cfg.horizon : space.suggested_horizon(cfg.rmax);
}

void require_positive(std::int64_t value, const char* flag) {
    if (value < 1) throw InputError(std::string(flag) + " must be positive");
}

// Prints the report in the selected format and, with --out, writes both.
void emit(const RunConfig& cfg, json report, const std::string& csv, const std::string& stem) {
    report["config"] = cfg.to_json();
    if (!cfg.out.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(cfg.out, ec);
        std::ofstream js(std::filesystem::path(cfg.out) / (stem + ".json"));
        std::ofstream cs(std::filesystem::path(cfg.out) / (stem + ".csv"));
        if (!js || !cs) throw InputError("output directory " + cfg.out + " is not writable");
        js << report.dump(2) << '\n';
        cs << csv;
    }
    if (cfg.format == "csv") {
        std::cout << csv;
    } else {
        std::cout << report.dump(2) << '\n';
    }
}

int run_ends(const RunConfig& cfg) {
    require_positive(cfg.rmax, "--rmax");
    const auto space = load_space(cfg);
    const Radius horizon = analysis_horizon(cfg, *space);
    const auto profile = ends_profile(*space, space->basepoint(), cfg.rmax, horizon);
    const auto count = stabilized_end_count(profile);
    std::ostringstream csv;
    csv << "R,count\n";
    for (const auto& level : profile.levels) csv << level.r << ',' << level.components.size() << '\n';
    emit(cfg, {{"space", space->spec()}, {"horizon", horizon}, {"ends", ends_json(*space, profile, count)}}, csv.str(),
         "ends");
    return kExitOk;
}

int run_same_end(const RunConfig& cfg) {
    require_positive(cfg.rmax, "--rmax");
    const auto space = load_space(cfg);
    const Radius horizon = analysis_horizon(cfg, *space);
    const auto r1 = parse_ray_spec(space, cfg.ray1, cfg.length, cfg.seed);
    const auto r2 = parse_ray_spec(space, cfg.ray2, cfg.length, cfg.seed + 1);
    SameEndOptions options;
    options.k = cfg.k;
    options.horizon = horizon;
    const auto verdict = same_end(*space, r1, r2, cfg.rmax, options);
    std::ostringstream csv;
    csv << "R,connected,separating_t\n";
    for (const auto& w : verdict.witnesses) {
        csv << w.r << ',' << w.connected << ',' << (w.separating_t ? std::to_string(*w.separating_t) : "") << '\n';
    }
    emit(cfg, {{"space", space->spec()}, {"horizon", horizon}, {"verdict", verdict_json(*space, verdict)}}, csv.str(),
         "same_end");
    return verdict.relation == EndRelation::Inconclusive ? kExitInconclusive : kExitOk;
}

int run_tree_pi0(const RunConfig& cfg) {
    const auto space = load_space(cfg);
    if (!space->is_tree()) throw InputError(space->kind_name() + " is not a tree");
    const TreeOracle tree(space);
    const auto alpha = parse_ray_spec(space, cfg.ray1, cfg.length, cfg.seed);
    const auto beta = parse_ray_spec(space, cfg.ray2, cfg.length, cfg.seed + 1);
    const auto verdict = pi0_equivalent(tree, alpha, beta);

    // Cross-check against the ends criterion below the compared height.
    // Balls in a tree grow exponentially, so the default horizon only reaches
    // the first few tail samples past the last visit to ball(root, rmax).
    const Radius rmax = cfg.rmax > 0 ? cfg.rmax : std::clamp<Radius>(verdict.compared_height / 2, 1, 6);
    Radius horizon = cfg.horizon;
    if (horizon <= 0) {
        horizon = space->suggested_horizon(rmax);
        const auto w1 = properness_window(*space, alpha, tree.root(), rmax);
        const auto w2 = properness_window(*space, beta, tree.root(), rmax);
        const auto t0 = std::max(w1.last_inside.back(), w2.last_inside.back()) + 1;
        for (auto t = t0; t <= t0 + 2; ++t) {
            for (const auto* ray : {&alpha, &beta}) {
                if (auto v = ray->at(t)) horizon = std::max(horizon, tree.depth(*v));
            }
        }
    }
    SameEndOptions options;
    options.horizon = horizon;
    options.keep_paths = false;
    const auto ends = same_end(*space, alpha, beta, rmax, options);
    json cross{{"rmax", rmax}, {"relation", to_string(ends.relation)}};
    if (verdict.relation != EndRelation::Inconclusive && ends.relation != EndRelation::Inconclusive) {
        cross["agrees"] = verdict.relation == ends.relation;
    } else {
        cross["agrees"] = nullptr;
    }

    std::ostringstream csv;
    csv << "height,first,second\n";
    if (verdict.first && verdict.second) {
        for (Radius h = 0; h <= verdict.compared_height; ++h) {
            csv << h << ',' << space->format(*verdict.first->at(h)) << ',' << space->format(*verdict.second->at(h))
                << '\n';
        }
    }
    emit(cfg, {{"space", space->spec()}, {"horizon", horizon}, {"pi0", pi0_json(*space, verdict)}, {"same_end", cross}},
         csv.str(), "tree_pi0");
    return verdict.relation == EndRelation::Inconclusive ? kExitInconclusive : kExitOk;
}

int run_cone_check(const RunConfig& cfg) {
    if (cfg.complex.empty()) throw InputError("--complex is required");
    const Radius rmax = cfg.rmax > 0 ? cfg.rmax : 20;
    const Radius horizon = cfg.horizon > 0 ? cfg.horizon : 2 * rmax;
    const auto x = FiniteComplex::from_json(read_json_file(cfg.complex));
    const auto report = verify_cone_bijection(x, rmax, horizon, cfg.mesh);
    std::ostringstream csv;
    csv << "R,count\n";
    for (std::size_t i = 0; i < report.counts.size(); ++i) csv << i + 1 << ',' << report.counts[i] << '\n';
    emit(cfg, {{"complex", x.to_json()}, {"horizon", horizon}, {"cone", cone_json(report)}}, csv.str(), "cone");
    return report.ends.stabilized && report.mesh_ok ? kExitOk : kExitInconclusive;
}

int run_staircase_refute(const RunConfig& cfg) {
    RunConfig staircase_cfg = cfg;
    staircase_cfg.kind = "staircase";
    const auto space = load_space(staircase_cfg);
    if (space->kind() != SpaceKind::Staircase) throw InputError("staircase-refute needs a staircase space");
    require_positive(cfg.a, "--A");
    if (cfg.hmin < 0 || cfg.hmax < cfg.hmin) throw InputError("need 0 <= --hmin <= --hmax");

    LatticeHomotopy phi;
    if (!cfg.candidate.empty()) {
        phi = read_lattice_homotopy(*space, read_json_file(cfg.candidate));
    } else if (!cfg.generator.empty()) {
        phi = generate_candidate(*space, cfg.generator, cfg.hmax, cfg.step);
    } else {
        throw InputError("give --generator or --candidate");
    }
    if (phi.height() < cfg.hmax) throw InputError("candidate has fewer rows than --hmax");

    const std::string endrays = !cfg.endrays.empty() ? cfg.endrays : cfg.generator == "constant" ? "L,L" : "L,R";
    if (endrays.size() != 3 || endrays[1] != ',') throw InputError("--endrays takes L,R style pairs");
    auto end_ray = [&](char c) {
        if (c == 'L') return staircase_alpha(cfg.hmax);
        if (c == 'R') return staircase_alpha_prime(cfg.hmax);
        throw InputError("endrays are L or R");
    };
    const auto scan = stability_scan(*space, phi, end_ray(endrays[0]), end_ray(endrays[2]), cfg.a, cfg.hmin, cfg.hmax);

    json report{{"space", space->spec()}, {"horizon", horizon_json(*space)}, {"scan", stability_json(scan)}};
    int code = kExitOk;
    if (!scan.stable) {
        report["status"] = "inconclusive: no stable behaviour word on the scanned rows";
        report["refutation"] = nullptr;
        code = kExitInconclusive;
    } else if (scan.stable->empty()) {
        report["status"] = "refutation unavailable: the stable behaviour word is empty";
        report["refutation"] = nullptr;
    } else {
        report["status"] = "refuted";
        report["refutation"] = refutation_json(*space, refute_properness(*space, scan));
    }
    std::ostringstream csv;
    csv << "h,cross,behav,clear\n";
    for (const auto& row : scan.rows) {
        csv << row.h << ',' << word_to_string(row.cross) << ',' << word_to_string(row.behav) << ',' << row.clear << '\n';
    }
    emit(cfg, report, csv.str(), "staircase");
    return code;
}

int run_map_check(const RunConfig& cfg) {
    if (cfg.trace.empty()) throw InputError("--trace is required");
    const auto trace = read_map_trace(read_json_file(cfg.trace));
    const auto control = check_controlled(trace, cfg.radii);
    std::vector<TargetBall> balls;
    for (auto r : cfg.target_radii) balls.push_back({trace.codomain->basepoint(), r});
    const auto proper = check_proper(trace, balls);
    const auto bound = estimate_affine_bound(trace);
    json report{{"domain", trace.domain->spec()},
                {"codomain", trace.codomain->spec()},
                {"horizon", horizon_json(*trace.codomain)},
                {"pairs", trace.pairs.size()},
                {"control", control_json(control)},
                {"proper", proper_json(*trace.codomain, proper)},
                {"affine_bound", {{"a", bound.a}, {"b", bound.b}, {"violations", affine_violations(trace, bound)}}},
                {"max_ratio", max_ratio(trace)}};
    std::ostringstream csv;
    csv << "R,modulus,stable\n";
    for (const auto& row : control.rows) csv << row.r << ',' << row.modulus << ',' << row.stable << '\n';
    emit(cfg, report, csv.str(), "map_check");
    return kExitOk;
}

int run_export_dot(const RunConfig& cfg) {
    const auto space = load_space(cfg);
    const auto center = cfg.center.empty() ? space->basepoint() : space->parse(cfg.center);
    const auto dot = export_dot(*space, center, cfg.radius);
    if (!cfg.out.empty()) {
        std::filesystem::create_directories(cfg.out);
        std::ofstream(std::filesystem::path(cfg.out) / "ball.dot") << dot;
    }
    std::cout << dot;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coarsekit: coarse-geometry checks on graphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto space_flags = [&](CLI::App* sub) {
        sub->add_option("--kind", cfg.kind, "space kind, e.g. line, grid-2, regular-tree-4, staircase");
        sub->add_option("--space", cfg.space_path, "JSON space spec file");
        sub->add_option("--nmax", cfg.nmax, "staircase height");
        sub->add_option("--step-rule", cfg.step_rule, "staircase step rule")->check(CLI::IsMember({"squared", "constant"}));
    };
    auto output_flags = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "stdout format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out, "directory for the JSON and CSV reports");
    };
    auto ray_flags = [&](CLI::App* sub) {
        sub->add_option("--ray1", cfg.ray1, "first ray spec (geo:, detour:, file:)")->required();
        sub->add_option("--ray2", cfg.ray2, "second ray spec")->required();
        sub->add_option("--length", cfg.length, "stored ray length");
        sub->add_option("--seed", cfg.seed, "seed for detour rays");
    };

    auto* ends = app.add_subcommand("ends", "ends profile about the basepoint");
    space_flags(ends);
    ends->add_option("--rmax", cfg.rmax, "largest ball radius")->required();
    ends->add_option("--horizon", cfg.horizon, "outer radius");
    output_flags(ends);

    auto* same = app.add_subcommand("same-end", "k-path test for two rays");
    space_flags(same);
    ray_flags(same);
    same->add_option("--rmax", cfg.rmax, "largest ball radius")->required();
    same->add_option("--horizon", cfg.horizon, "outer radius");
    same->add_option("--k", cfg.k, "path step bound");
    output_flags(same);

    auto* pi0 = app.add_subcommand("tree-pi0", "coarse path classes of two rays in a tree");
    space_flags(pi0);
    ray_flags(pi0);
    pi0->add_option("--rmax", cfg.rmax, "radius for the ends cross-check");
    pi0->add_option("--horizon", cfg.horizon, "outer radius for the cross-check");
    output_flags(pi0);

    auto* cone = app.add_subcommand("cone-check", "ends of the open cone over a finite complex");
    cone->add_option("--complex", cfg.complex, "complex JSON file")->required();
    cone->add_option("--rmax", cfg.rmax, "largest ball radius");
    cone->add_option("--horizon", cfg.horizon, "number of layers");
    cone->add_option("--mesh", cfg.mesh, "edge subdivision density");
    output_flags(cone);

    auto* stair = app.add_subcommand("staircase-refute", "behaviour-word scan of a candidate 1-path");
    stair->add_option("--space", cfg.space_path, "JSON space spec file");
    stair->add_option("--nmax", cfg.nmax, "staircase height");
    stair->add_option("--step-rule", cfg.step_rule, "staircase step rule")->check(CLI::IsMember({"squared", "constant"}));
    stair->add_option("--generator", cfg.generator, "candidate generator id");
    stair->add_option("--candidate", cfg.candidate, "row table JSON file");
    stair->add_option("--endrays", cfg.endrays, "end rays, L,R or L,L");
    stair->add_option("--step", cfg.step, "step crossed by the generator");
    stair->add_option("--A", cfg.a, "ball radius A");
    stair->add_option("--hmin", cfg.hmin, "first row");
    stair->add_option("--hmax", cfg.hmax, "last row");
    output_flags(stair);

    auto* map = app.add_subcommand("map-check", "control and properness of a traced map");
    map->add_option("--trace", cfg.trace, "trace JSON file")->required();
    map->add_option("--radii", cfg.radii, "radii for the control modulus");
    map->add_option("--target-radii", cfg.target_radii, "radii of target balls about the codomain basepoint");
    output_flags(map);

    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a ball");
    space_flags(dot);
    dot->add_option("--center", cfg.center, "center vertex (default: basepoint)");
    dot->add_option("--radius", cfg.radius, "ball radius");
    dot->add_option("--out", cfg.out, "directory for ball.dot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalid;
    }

    try {
        auto* sub = app.get_subcommands().front();
        cfg.command = sub->get_name();
        if (sub == ends) return run_ends(cfg);
        if (sub == same) return run_same_end(cfg);
        if (sub == pi0) return run_tree_pi0(cfg);
        if (sub == cone) return run_cone_check(cfg);
        if (sub == stair) return run_staircase_refute(cfg);
        if (sub == map) return run_map_check(cfg);
        return run_export_dot(cfg);
    } catch (const InputError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const HorizonError& e) {
        std::cerr << "inconclusive at horizon: " << e.what() << '\n';
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
