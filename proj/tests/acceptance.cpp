// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "coarse/coarsemaps.hpp"
#include "coarse/cones.hpp"
#include "coarse/ends.hpp"
#include "coarse/obstruction.hpp"
#include "coarse/trees.hpp"
#include "oracles.hpp"
#include "word_oracles.hpp"

using namespace coarse;
using nlohmann::json;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

Outcome lattice_ends(const SpacePtr& space, Radius r_max, Radius horizon, std::size_t expected, double limit) {
    const auto t0 = Clock::now();
    const auto profile = ends_profile(*space, space->basepoint(), r_max, horizon);
    const auto count = stabilized_end_count(profile);
    const double t = seconds_since(t0);
    const auto counts = profile.counts();
    bool every = counts.size() == static_cast<std::size_t>(r_max);
    for (auto c : counts) every = every && c == expected;
    std::ostringstream d;
    d << "counts " << (every ? "all " + std::to_string(expected) : join(counts)) << ", stabilized "
      << (count.stabilized ? std::to_string(*count.stabilized) : "none") << ", " << t << " s (limit " << limit << " s)";
    return {every && count.stabilized == expected && t < limit, d.str()};
}

Outcome c1_line() { return lattice_ends(make_line(), 50, 120, 2, 1.0); }

Outcome c2_grid() { return lattice_ends(make_grid(2), 20, 60, 1, 10.0); }

Outcome c3_staircase() {
    const auto t0 = Clock::now();
    const auto stair = make_staircase(200);
    const Radius horizon = stair->suggested_horizon(50);
    const auto count = stabilized_end_count(ends_profile(*stair, stair->basepoint(), 50, horizon));
    const double t = seconds_since(t0);
    std::ostringstream d;
    d << "horizon " << horizon << ", stabilized " << (count.stabilized ? std::to_string(*count.stabilized) : "none")
      << ", " << t << " s (limit 30 s)";
    return {count.stabilized == 1u && t < 30.0, d.str()};
}

Outcome c4_tree_growth() {
    const auto tree = make_regular_tree(4);
    const auto profile = ends_profile(*tree, tree->basepoint(), 4, 5);
    const auto count = stabilized_end_count(profile);
    const std::vector<std::size_t> expected{4, 12, 36, 108};
    bool oracle_ok = true;
    for (Radius r = 1; r <= 4; ++r) {
        oracle_ok = oracle_ok && oracle::unbounded_components(*tree, tree->basepoint(), r, 5) == expected[r - 1];
    }
    const bool pass = profile.counts() == expected && count.growing() && !count.stabilized && oracle_ok;
    return {pass, "counts " + join(profile.counts()) + (count.growing() ? ", growing" : ", not growing") +
                      (oracle_ok ? ", BFS oracle agrees" : ", BFS oracle disagrees")};
}

// A ray out along hair j, optionally with detours of up to k edges.
VertexRay random_hair_ray(const TreeOracle& tree, std::int32_t hair, std::int64_t length, std::mt19937_64& rng) {
    const auto spine = hair_ray(tree, hair, length);
    const int k = static_cast<int>(rng() % 4);
    return k == 0 ? spine : detour_ray(tree, spine, length, k, rng);
}

Outcome c5_tree_decision() {
    std::mt19937_64 rng(20260501);
    std::size_t conclusive = 0, agree = 0, pairs = 0, max_window = 0, same = 0;
    for (int trial = 0; trial < 100; ++trial) {
        RandomTreeOptions opts;
        opts.core_vertices = 80 + rng() % 121;
        opts.max_degree = 4;
        opts.hairs = 2 + rng() % 3;
        const auto space = random_hairy_tree(rng, opts);
        const TreeOracle tree(space);
        const Radius r_max = space->suggested_horizon(1);
        SameEndOptions so;
        so.horizon = r_max + 60;
        so.keep_paths = false;
        max_window = std::max(max_window, ball(*space, space->basepoint(), *so.horizon).size());
        for (int p = 0; p < 10; ++p) {
            const auto i = static_cast<std::int32_t>(rng() % opts.hairs);
            const auto j = static_cast<std::int32_t>(rng() % opts.hairs);
            const auto a = random_hair_ray(tree, i, r_max + 20, rng);
            const auto b = random_hair_ray(tree, j, r_max + 20, rng);
            const auto v = pi0_equivalent(tree, a, b);
            const auto e = same_end(*space, a.extended_to(4 * *so.horizon), b.extended_to(4 * *so.horizon), r_max, so);
            ++pairs;
            if (v.relation == EndRelation::Inconclusive || e.relation == EndRelation::Inconclusive) continue;
            ++conclusive;
            if (v.relation == e.relation) ++agree;
            if (v.relation == EndRelation::Same) ++same;
        }
    }
    std::ostringstream d;
    d << agree << "/" << conclusive << " conclusive pairs agree (" << pairs << " pairs, " << same
      << " same-end), largest window " << max_window << " vertices";
    return {conclusive > 0 && agree == conclusive && max_window <= 500, d.str()};
}

Outcome c6_witness() {
    std::mt19937_64 rng(606);
    int passed = 0, brute_ok = 0;
    std::int64_t longest = 0;
    for (int trial = 0; trial < 50; ++trial) {
        RandomTreeOptions opts;
        opts.core_vertices = 30 + rng() % 50;
        opts.hairs = 1 + rng() % 3;
        const auto space = random_hairy_tree(rng, opts);
        const TreeOracle tree(space);
        const auto hair = static_cast<std::int32_t>(rng() % opts.hairs);
        const auto spine = hair_ray(tree, hair, space->suggested_horizon(1) + 10);
        const auto alpha = detour_ray(tree, spine, spine.last_index(), 1 + static_cast<int>(rng() % 3), rng);
        const auto w = homotopy_witness(tree, alpha);
        if (w.passes && w.row_bound_ok && w.certificate.proper_evidence) ++passed;
        longest = std::max(longest, w.phi.height());
        // Independent row scan through depths of meets.
        auto d = [&](const VertexId& u, const VertexId& v) {
            return tree.depth(u) + tree.depth(v) - 2 * tree.depth(meet(tree, u, v));
        };
        bool ok = true;
        for (const auto& b : w.certificate.bounds) {
            Radius row = 0;
            for (std::int64_t h = 0; h <= w.phi.height(); ++h) {
                for (std::int64_t i = 0; i <= h; ++i) {
                    for (std::int64_t i2 = i + 1; i2 <= h && i2 - i < b.r; ++i2) row = std::max(row, d(w.phi.at(i, h), w.phi.at(i2, h)));
                }
            }
            ok = ok && row == b.same_row && row <= (w.lipschitz + 1) * b.r;
        }
        for (const auto& p : w.certificate.preimages) ok = ok && p.confined;
        if (ok) ++brute_ok;
    }
    std::ostringstream d;
    d << passed << "/50 witnesses pass, " << brute_ok << "/50 confirmed by direct row scan, tallest window " << longest;
    return {passed == 50 && brute_ok == 50, d.str()};
}

Outcome c7_staircase() {
    const auto stair = make_staircase(200);
    const auto alpha = staircase_alpha(70), alpha_prime = staircase_alpha_prime(70);
    int good = 0, total = 0;
    std::set<std::string> words;
    std::string failures;
    for (const auto& id : adversarial_generators()) {
        const auto phi = generate_candidate(*stair, id, 70);
        for (Radius a : {1, 2, 3}) {
            ++total;
            const auto scan = stability_scan(*stair, phi, alpha, alpha_prime, a, 20, 70);
            bool ok = scan.stable && !scan.stable->empty() && scan.facts_hold && scan.threshold == 20;
            if (ok) {
                const auto ref = refute_properness(*stair, scan);
                ok = ref.points.size() == scan.rows.size() && ref.lattice_spread == 50;
                for (const auto& p : ref.points) ok = ok && distance(*stair, p.image, staircase_left(ref.step)) <= a - 1;
                ok = ok && ref.image_diameter <= 2 * (a - 1);
                words.insert(word_to_string(*scan.stable));
            }
            if (ok) {
                ++good;
            } else {
                failures += " " + id + "/A=" + std::to_string(a);
            }
        }
    }
    // Negative controls: no stable nonempty word, hence no refutation.
    bool control_ok = true;
    const auto flat = make_staircase(200, StepRule::Constant);
    const auto mid = generate_candidate(*flat, "midpoint-crosser", 70);
    for (Radius a : {1, 2, 3}) {
        const auto scan = stability_scan(*flat, mid, alpha, alpha_prime, a, 20, 70);
        try {
            refute_properness(*flat, scan);
            control_ok = false;
        } catch (const InputError&) {
        }
    }
    const auto constant = stability_scan(*stair, generate_candidate(*stair, "constant", 70), alpha, alpha, 2, 20, 70);
    control_ok = control_ok && constant.stable && constant.stable->empty();

    std::ostringstream d;
    d << good << "/" << total << " candidate scans refuted (stable words:";
    for (const auto& w : words) d << " [" << w << "]";
    d << "), negative control " << (control_ok ? "unrefuted" : "REFUTED") << failures;
    return {good == total && total >= 15 && control_ok, d.str()};
}

// k components: intervals alternating with isolated vertices.
FiniteComplex components(int k) {
    json doc{{"dimension", 1}, {"vertices", json::array()}, {"simplices", json::array()}};
    const double width = 2.0 / k;
    int next = 0;
    for (int c = 0; c < k; ++c) {
        const double lo = -1.0 + c * width;
        doc["vertices"].push_back({std::to_string(lo)});
        if (c % 2 == 0) {
            doc["vertices"].push_back({std::to_string(lo + width * 0.5)});
            doc["simplices"].push_back({next, next + 1});
            next += 2;
        } else {
            ++next;
        }
    }
    return FiniteComplex::from_json(doc);
}

Outcome c8_cones() {
    bool pass = true;
    std::ostringstream d;
    for (int k : {1, 2, 3, 5}) {
        const auto t0 = Clock::now();
        const auto report = verify_cone_bijection(components(k), 20, 40);
        const double t = seconds_since(t0);
        const bool ok = report.ends.stabilized == static_cast<std::size_t>(k) && report.passes && t < 60.0;
        pass = pass && ok;
        d << "k=" << k << ": ends " << (report.ends.stabilized ? std::to_string(*report.ends.stabilized) : "none") << " ("
          << t << " s)" << (k == 5 ? "" : "; ");
    }
    return {pass, d.str()};
}

VertexId random_vertex(const TreeOracle& tree, std::mt19937_64& rng, int max_steps) {
    VertexId v = tree.root();
    const int steps = static_cast<int>(rng() % static_cast<std::uint64_t>(max_steps + 1));
    for (int k = 0; k < steps; ++k) {
        const auto nb = tree.space().neighbors(v);
        v = nb[rng() % nb.size()];
    }
    return v;
}

Outcome c9_tree_geodesics() {
    std::mt19937_64 rng(909);
    std::vector<std::unique_ptr<TreeOracle>> trees;
    trees.push_back(std::make_unique<TreeOracle>(make_regular_tree(3)));
    trees.push_back(std::make_unique<TreeOracle>(make_free_group(2)));
    for (int t = 0; t < 6; ++t) {
        RandomTreeOptions opts;
        opts.core_vertices = 60 + rng() % 200;
        opts.hairs = 2;
        trees.push_back(std::make_unique<TreeOracle>(random_hairy_tree(rng, opts)));
    }
    auto pick_tree = [&]() -> const TreeOracle& { return *trees[rng() % trees.size()]; };

    int concat = 0, concat_bad = 0;
    while (concat < 10000) {
        const auto& tree = pick_tree();
        const auto x1 = random_vertex(tree, rng, 10), x2 = random_vertex(tree, rng, 10), x3 = random_vertex(tree, rng, 10);
        const auto a = tree_geodesic(tree, x1, x2), b = tree_geodesic(tree, x2, x3);
        const std::set<VertexId> sa(a.begin(), a.end());
        std::size_t shared = 0;
        for (const auto& v : b) shared += sa.count(v);
        if (shared != 1) continue;
        ++concat;
        const auto& s = tree.space();
        if (distance(s, x1, x3) != distance(s, x1, x2) + distance(s, x2, x3)) ++concat_bad;
    }

    int cover_bad = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const auto& tree = pick_tree();
        std::vector<VertexId> xs(2 + rng() % 5);
        for (auto& x : xs) x = random_vertex(tree, rng, 10);
        std::set<VertexId> covered;
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            for (const auto& v : tree_geodesic(tree, xs[i], xs[i + 1])) covered.insert(v);
        }
        for (const auto& v : tree_geodesic(tree, xs.front(), xs.back())) {
            if (!covered.count(v)) {
                ++cover_bad;
                break;
            }
        }
    }

    // Six-point configurations: y1, y3 are short walks from x1, x3, and y2 is
    // usually matched to x2 by distance to the far end so the hypotheses hold.
    int six = 0, six_bad = 0, attempts = 0;
    while (six < 10000 && attempts < 1000000) {
        ++attempts;
        const auto& tree = pick_tree();
        const Radius r = 1 + static_cast<Radius>(rng() % 4);
        auto near = [&](const VertexId& x) {
            VertexId y = x;
            const auto steps = rng() % static_cast<std::uint64_t>(r);
            for (std::uint64_t k = 0; k < steps; ++k) {
                const auto nb = tree.space().neighbors(y);
                y = nb[rng() % nb.size()];
            }
            return y;
        };
        const auto x1 = random_vertex(tree, rng, 8), x3 = random_vertex(tree, rng, 12);
        const auto y1 = near(x1), y3 = near(x3);
        const auto gx = tree_geodesic(tree, x1, x3), gy = tree_geodesic(tree, y1, y3);
        const auto ix = rng() % gx.size();
        const auto x2 = gx[ix];
        const auto to_end = gx.size() - 1 - ix;
        VertexId y2 = gy[rng() % gy.size()];
        if (rng() % 4 != 0 && to_end < gy.size()) y2 = gy[gy.size() - 1 - to_end];
        const auto res = six_point_gap(tree, x1, x2, x3, y1, y2, y3, r);
        if (!res.hypotheses_hold) continue;
        ++six;
        if (res.gap >= 2 * r) ++six_bad;
    }

    std::ostringstream d;
    d << "concatenation " << concat_bad << " violations / " << concat << "; cover " << cover_bad
      << " violations / 10000; six-point " << six_bad << " violations / " << six << " configurations";
    return {concat_bad == 0 && cover_bad == 0 && six == 10000 && six_bad == 0, d.str()};
}

Outcome c10_interpolation() {
    std::mt19937_64 rng(1010);
    std::vector<SpacePtr> spaces{make_grid(2), make_regular_tree(3), make_staircase(200), make_free_group(2)};
    int good = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto& space = spaces[static_cast<std::size_t>(trial) % spaces.size()];
        const Radius a = 1 + static_cast<Radius>(rng() % 4);
        std::vector<VertexId> samples{space->basepoint()};
        for (int s = 0; s < 25; ++s) {
            VertexId next = samples.back();
            const auto steps = 1 + rng() % static_cast<std::uint64_t>(a);
            for (std::uint64_t k = 0; k < steps; ++k) {
                const auto nb = space->neighbors(next);
                next = nb[rng() % nb.size()];
            }
            samples.push_back(next);
        }
        const auto out = geodesic_interpolate(VertexRay(samples), *space);
        const auto path = out.ray.vertices();
        bool ok = out.matched.size() == samples.size();
        Radius measured_a = 0;
        for (std::size_t s = 1; ok && s < samples.size(); ++s) {
            measured_a = std::max(measured_a, oracle::bfs_distance(*space, samples[s - 1], samples[s], a));
        }
        for (std::size_t s = 0; ok && s < samples.size(); ++s) ok = path[static_cast<std::size_t>(out.matched[s])] == samples[s];
        for (std::size_t i = 1; ok && i < path.size(); ++i) ok = oracle::bfs_distance(*space, path[i - 1], path[i], 1) == 1;
        // Each output point before the next sample is within A + A' of the sample
        // opening its segment, A' = 1.
        Radius close = 0;
        for (std::size_t s = 0; ok && s + 1 < samples.size(); ++s) {
            for (auto m = out.matched[s]; m < out.matched[s + 1]; ++m) {
                const auto d = oracle::bfs_distance(*space, path[static_cast<std::size_t>(m)], samples[s], a + 1);
                close = d < 0 ? a + 2 : std::max(close, d);
            }
        }
        ok = ok && out.input_step == measured_a && close <= measured_a + 1 && close == out.closeness;
        if (ok) ++good;
    }
    return {good == 100, std::to_string(good) + "/100 rays unit-step, matched and within A + A'"};
}

Outcome c11_words() {
    std::mt19937_64 rng(1111);
    int words_ok = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto w = oracle::random_word(rng, 40, 4);
        const auto r = reduce_word(w);
        bool ok = oracle::fully_reduced(r) && oracle::same_letters(reduce_word(r), r);
        for (int order = 0; order < 3; ++order) ok = ok && oracle::same_letters(oracle::reduce_in_random_order(w, rng), r);
        if (ok) ++words_ok;
    }

    const auto stair = make_staircase(200);
    std::vector<std::string> ids = adversarial_generators();
    ids.push_back("drifting-crosser");
    ids.push_back("midpoint-crosser");
    std::vector<LatticeHomotopy> candidates;
    for (const auto& id : ids) candidates.push_back(generate_candidate(*stair, id, 70));
    int rows_ok = 0, letters = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Radius a = 1 + static_cast<Radius>(rng() % 3);
        const StepZones zones(*stair, a);
        const auto& phi = candidates[rng() % candidates.size()];
        const auto h = 5 + static_cast<std::int64_t>(rng() % 66);
        const auto row = analyse_row(*stair, phi, h, zones);
        letters += static_cast<int>(row.cross.size());
        bool ok = true;
        for (int split = 0; split < 10; ++split) {
            ok = ok && oracle::subdivision_multiplicative(*stair, zones, row.path, rng, 1 + rng() % 6);
        }
        if (ok) ++rows_ok;
    }
    std::ostringstream d;
    d << words_ok << "/1000 words idempotent and confluent; " << rows_ok << "/100 rows multiplicative under subdivision ("
      << letters << " crossing letters)";
    return {words_ok == 1000 && rows_ok == 100, d.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"ends of the line", c1_line},
        {"ends of the plane lattice", c2_grid},
        {"staircase has one end", c3_staircase},
        {"free-group growth", c4_tree_growth},
        {"tree decision soundness", c5_tree_decision},
        {"homotopy witness validity", c6_witness},
        {"staircase refutation", c7_staircase},
        {"cone bijection", c8_cones},
        {"tree geodesic properties", c9_tree_geodesics},
        {"interpolation contract", c10_interpolation},
        {"word algebra", c11_words},
    };
    int failed = 0;
    for (std::size_t n = 0; n < criteria.size(); ++n) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[n].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s %2zu %-28s %7.2f s  %s\n", o.pass ? "PASS" : "FAIL", n + 1, criteria[n].first.c_str(),
                    seconds_since(t0), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
