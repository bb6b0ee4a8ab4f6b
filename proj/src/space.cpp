#include "coarse/space.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "coarse/local_graph.hpp"

namespace coarse {
namespace {

using DistMap = std::unordered_map<VertexId, Radius, VertexIdHash>;

// BFS from `source` that stops once `target` has been labelled (or the
// frontier passes `limit`). Returns the labels gathered so far.
DistMap bfs_until(const SpaceOracle& space, const VertexId& source, const VertexId& target, Radius limit) {
    DistMap dist;
    dist.emplace(source, 0);
    std::vector<VertexId> frontier{source}, next;
    Radius d = 0;
    while (!frontier.empty() && !dist.count(target) && d < limit) {
        next.clear();
        for (const auto& v : frontier) {
            for (auto& w : space.neighbors(v)) {
                if (dist.emplace(w, d + 1).second) next.push_back(std::move(w));
            }
        }
        frontier.swap(next);
        ++d;
    }
    return dist;
}

void require_within_horizon(const SpaceOracle& space, const VertexId& v) {
    if (!space.contains(v)) throw InputError("not a vertex of " + space.kind_name());
    const Radius d = space.depth(v);
    if (d > space.horizon()) {
        throw HorizonError("vertex " + space.format(v) + " at depth " + std::to_string(d) +
                           " lies outside horizon " + std::to_string(space.horizon()));
    }
}

}  // namespace

Radius SpaceOracle::depth(const VertexId& v) const {
    auto labels = bfs_until(*this, basepoint(), v, horizon());
    auto it = labels.find(v);
    if (it == labels.end()) {
        throw HorizonError("vertex " + format(v) + " not reached within horizon " + std::to_string(horizon()));
    }
    return it->second;
}

Radius distance(const SpaceOracle& space, const VertexId& u, const VertexId& v) {
    require_within_horizon(space, u);
    require_within_horizon(space, v);
    if (u == v) return 0;
    if (auto d = space.closed_form_distance(u, v)) return *d;
    auto labels = bfs_until(space, u, v, 2 * space.horizon() + 1);
    auto it = labels.find(v);
    if (it == labels.end()) {
        throw HorizonError("no path between " + space.format(u) + " and " + space.format(v));
    }
    return it->second;
}

std::vector<VertexId> ball(const SpaceOracle& space, const VertexId& center, Radius r) {
    if (r > space.horizon()) {
        throw HorizonError("ball radius " + std::to_string(r) + " exceeds horizon " +
                           std::to_string(space.horizon()));
    }
    require_within_horizon(space, center);
    LocalGraph g(space, center, r);
    std::vector<VertexId> out;
    out.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out.push_back(g.vertex(static_cast<std::int32_t>(i)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> geodesic(const SpaceOracle& space, const VertexId& u, const VertexId& v) {
    require_within_horizon(space, u);
    require_within_horizon(space, v);
    std::vector<VertexId> path{u};
    if (u == v) return path;

    if (space.closed_form_distance(u, v)) {
        auto d = *space.closed_form_distance(u, v);
        VertexId cur = u;
        while (d > 0) {
            auto nbrs = space.neighbors(cur);
            std::sort(nbrs.begin(), nbrs.end());
            auto it = std::find_if(nbrs.begin(), nbrs.end(), [&](const VertexId& w) {
                return *space.closed_form_distance(w, v) == d - 1;
            });
            cur = *it;
            path.push_back(cur);
            --d;
        }
        return path;
    }

    auto labels = bfs_until(space, v, u, 2 * space.horizon() + 1);
    auto it = labels.find(u);
    if (it == labels.end()) {
        throw HorizonError("no path between " + space.format(u) + " and " + space.format(v));
    }
    Radius d = it->second;
    VertexId cur = u;
    while (d > 0) {
        auto nbrs = space.neighbors(cur);
        std::sort(nbrs.begin(), nbrs.end());
        for (const auto& w : nbrs) {
            auto lw = labels.find(w);
            if (lw != labels.end() && lw->second == d - 1) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
        --d;
    }
    return path;
}

std::vector<OutsideComponent> components_outside(const SpaceOracle& space, const VertexId& center,
                                                 Radius r, Radius horizon) {
    if (r < 0) throw InputError("negative radius");
    if (r >= horizon) {
        throw InputError("inner radius " + std::to_string(r) + " must be below horizon " +
                         std::to_string(horizon));
    }
    LocalGraph g(space, center, horizon);
    const auto labels = g.outside_labels(r);
    std::int32_t count = 0;
    for (auto l : labels) count = std::max(count, l + 1);
    std::vector<OutsideComponent> comps(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (labels[i] < 0) continue;
        auto& c = comps[static_cast<std::size_t>(labels[i])];
        c.vertices.push_back(g.vertex(static_cast<std::int32_t>(i)));
        if (g.dist(static_cast<std::int32_t>(i)) == horizon) c.unbounded = true;
    }
    for (auto& c : comps) std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.vertices.front() < b.vertices.front(); });
    return comps;
}

std::string export_dot(const SpaceOracle& space, const VertexId& center, Radius r) {
    LocalGraph g(space, center, r);
    std::ostringstream out;
    out << "graph ball {\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto id = static_cast<std::int32_t>(i);
        out << "  v" << i << " [label=\"" << space.format(g.vertex(id)) << "\"";
        if (i == 0) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (auto j : g.adjacent(static_cast<std::int32_t>(i))) {
            if (static_cast<std::size_t>(j) > i) out << "  v" << i << " -- v" << j << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace coarse
