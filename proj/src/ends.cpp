#include "coarse/ends.hpp"

#include <algorithm>
#include <set>

#include "coarse/local_graph.hpp"

namespace coarse {

std::vector<std::size_t> EndsProfile::counts() const {
    std::vector<std::size_t> out;
    out.reserve(levels.size());
    for (const auto& l : levels) out.push_back(l.components.size());
    return out;
}

std::string to_string(EndRelation r) {
    switch (r) {
        case EndRelation::Same: return "same";
        case EndRelation::Different: return "different";
        default: return "inconclusive";
    }
}

EndsProfile ends_profile(const SpaceOracle& space, const VertexId& x0, Radius r_max, Radius horizon) {
    if (r_max < 1) throw InputError("r_max must be positive");
    if (r_max >= horizon) {
        throw InputError("r_max " + std::to_string(r_max) + " must be below horizon " + std::to_string(horizon));
    }
    if (horizon > space.horizon()) {
        throw HorizonError("horizon " + std::to_string(horizon) + " exceeds oracle horizon " +
                           std::to_string(space.horizon()));
    }
    LocalGraph g(space, x0, horizon);
    const auto n = g.size();

    // Vertices are added from the outside in, so components only merge as R
    // decreases; one union-find pass serves every radius.
    struct RootInfo {
        std::int32_t rep = -1;
        std::int32_t witness = -1;
        std::size_t size = 0;
    };
    UnionFind uf(n);
    std::vector<RootInfo> info(n);
    std::vector<char> added(n, 0);
    std::set<std::size_t> live_unbounded;

    auto better = [&](std::int32_t a, std::int32_t b) {
        if (a < 0) return b;
        if (b < 0) return a;
        return g.vertex(b) < g.vertex(a) ? b : a;
    };

    // BFS order is non-decreasing in distance; walk it backwards.
    std::vector<std::int32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::int32_t>(i);
    std::size_t cursor = n;

    EndsProfile profile;
    profile.basepoint = x0;
    profile.horizon = horizon;
    profile.levels.resize(static_cast<std::size_t>(r_max));

    for (Radius r = r_max; r >= 1; --r) {
        while (cursor > 0 && g.dist(order[cursor - 1]) >= r) {
            const auto v = order[--cursor];
            const auto vi = static_cast<std::size_t>(v);
            added[vi] = 1;
            info[vi] = {v, g.dist(v) == horizon ? v : -1, 1};
            if (info[vi].witness >= 0) live_unbounded.insert(vi);
            for (auto w : g.adjacent(v)) {
                const auto wi = static_cast<std::size_t>(w);
                if (!added[wi]) continue;
                const auto a = uf.find(vi), b = uf.find(wi);
                if (a == b) continue;
                const RootInfo merged{better(info[a].rep, info[b].rep), better(info[a].witness, info[b].witness),
                                      info[a].size + info[b].size};
                live_unbounded.erase(a);
                live_unbounded.erase(b);
                const auto root = uf.unite(a, b);
                info[root] = merged;
                if (merged.witness >= 0) live_unbounded.insert(root);
            }
        }
        auto& level = profile.levels[static_cast<std::size_t>(r - 1)];
        level.r = r;
        for (auto root : live_unbounded) {
            level.components.push_back({g.vertex(info[root].rep), g.vertex(info[root].witness), info[root].size});
        }
        std::sort(level.components.begin(), level.components.end(),
                  [](const auto& a, const auto& b) { return a.representative < b.representative; });
    }
    return profile;
}

EndCount stabilized_end_count(const EndsProfile& profile) {
    EndCount out;
    out.sequence = profile.counts();
    const auto& seq = out.sequence;
    if (seq.size() < kMinStabilizationRadii) {
        const bool increasing = seq.size() >= 2 && std::adjacent_find(seq.begin(), seq.end(), [](auto a, auto b) {
                                                         return b <= a;
                                                     }) == seq.end();
        if (increasing) return out;
        throw InputError("profile spans " + std::to_string(seq.size()) + " radii; at least " +
                         std::to_string(kMinStabilizationRadii) + " are needed");
    }
    const auto from = seq.size() / 2;
    if (std::all_of(seq.begin() + static_cast<std::ptrdiff_t>(from), seq.end(),
                    [&](std::size_t c) { return c == seq.back(); })) {
        out.stabilized = seq.back();
    }
    return out;
}

namespace {

std::vector<VertexId> path_outside(const LocalGraph& g, std::int32_t from, std::int32_t to, Radius r) {
    std::vector<std::int32_t> parent(g.size(), -1);
    std::vector<std::int32_t> queue{from};
    parent[static_cast<std::size_t>(from)] = from;
    for (std::size_t h = 0; h < queue.size() && parent[static_cast<std::size_t>(to)] < 0; ++h) {
        for (auto w : g.adjacent(queue[h])) {
            if (g.dist(w) <= r || parent[static_cast<std::size_t>(w)] >= 0) continue;
            parent[static_cast<std::size_t>(w)] = queue[h];
            queue.push_back(w);
        }
    }
    std::vector<VertexId> path;
    if (parent[static_cast<std::size_t>(to)] < 0) return path;
    for (auto v = to; v != from; v = parent[static_cast<std::size_t>(v)]) path.push_back(g.vertex(v));
    path.push_back(g.vertex(from));
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

EndVerdict same_end(const SpaceOracle& space, const VertexRay& r1, const VertexRay& r2, Radius r_max,
                    const SameEndOptions& options) {
    if (r_max < 1) throw InputError("r_max must be positive");
    if (options.k < 1) throw InputError("k must be positive");
    const auto x0 = space.basepoint();
    const Radius horizon = options.horizon.value_or(space.suggested_horizon(r_max));
    if (horizon <= r_max) throw InputError("horizon must exceed r_max");

    EndVerdict verdict;
    const auto w1 = properness_window(space, r1, x0, r_max);
    const auto w2 = properness_window(space, r2, x0, r_max);
    if (!w1.certified || !w2.certified) {
        verdict.note = "properness not certified on the window";
        return verdict;
    }

    LocalGraph g(space, x0, horizon);
    // Past its stored samples a ray answers through its extension rule, if any.
    const auto last = std::max(r1.last_index(), r2.last_index());
    bool all_connected = true, any_separated = false;

    for (Radius r = 1; r <= r_max; ++r) {
        EndWitness w;
        w.r = r;
        w.from_t = std::max(w1.last_inside[static_cast<std::size_t>(r)], w2.last_inside[static_cast<std::size_t>(r)]) + 1;
        w.to_t = last;
        const auto labels = g.outside_labels(r, options.k);
        std::size_t tested = 0;
        bool connected = true;
        for (auto t = w.from_t; t <= w.to_t; ++t) {
            auto a = r1.at(t), b = r2.at(t);
            if (!a || !b) continue;
            auto ia = g.find(*a), ib = g.find(*b);
            if (!ia || !ib) continue;
            ++tested;
            const bool joined = labels[static_cast<std::size_t>(*ia)] == labels[static_cast<std::size_t>(*ib)];
            if (tested == 1 && joined && options.keep_paths && options.k == 1) {
                w.example_path = path_outside(g, *ia, *ib, r);
            }
            if (!joined) {
                connected = false;
                w.separating_t = t;
                break;
            }
        }
        w.connected = tested > 0 && connected;
        if (!connected) any_separated = true;
        if (!w.connected) all_connected = false;
        verdict.witnesses.push_back(std::move(w));
    }

    if (any_separated) {
        verdict.relation = EndRelation::Different;
    } else if (all_connected) {
        verdict.relation = EndRelation::Same;
    } else {
        verdict.note = "no common tail indices at some radius";
    }
    return verdict;
}

std::vector<std::vector<VertexId>> geodesic_representatives(const SpaceOracle& space, const VertexId& x0,
                                                            Radius r, Radius horizon) {
    auto profile = ends_profile(space, x0, r, horizon);
    std::vector<std::vector<VertexId>> rays;
    for (const auto& c : profile.levels.back().components) rays.push_back(geodesic(space, x0, c.witness));
    return rays;
}

}  // namespace coarse
