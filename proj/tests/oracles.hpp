// Brute-force reference computations for the unit tests. Everything here
// walks the graph through SpaceOracle::neighbors only.
#ifndef COARSE_TEST_ORACLES_HPP
#define COARSE_TEST_ORACLES_HPP

#include <deque>
#include <map>
#include <set>
#include <vector>

#include "coarse/space.hpp"

namespace oracle {

using coarse::Radius;
using coarse::SpaceOracle;
using coarse::VertexId;

inline std::map<VertexId, Radius> bfs(const SpaceOracle& space, const VertexId& source, Radius limit) {
    std::map<VertexId, Radius> dist{{source, 0}};
    std::deque<VertexId> queue{source};
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        const Radius d = dist[v];
        if (d == limit) continue;
        for (const auto& w : space.neighbors(v)) {
            if (dist.emplace(w, d + 1).second) queue.push_back(w);
        }
    }
    return dist;
}

inline Radius bfs_distance(const SpaceOracle& space, const VertexId& u, const VertexId& v, Radius limit = 400) {
    std::map<VertexId, Radius> dist{{u, 0}};
    std::deque<VertexId> queue{u};
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        const Radius d = dist[x];
        if (x == v) return d;
        if (d == limit) continue;
        for (const auto& w : space.neighbors(x)) {
            if (dist.emplace(w, d + 1).second) queue.push_back(w);
        }
    }
    return -1;
}

// Components of {v : R <= d(x0, v) <= horizon} that reach the sphere of
// radius horizon.
inline std::size_t unbounded_components(const SpaceOracle& space, const VertexId& x0, Radius r, Radius horizon) {
    const auto dist = bfs(space, x0, horizon);
    std::set<VertexId> seen;
    std::size_t count = 0;
    for (const auto& [start, d] : dist) {
        if (d < r || seen.count(start)) continue;
        bool reaches = false;
        std::vector<VertexId> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            if (dist.at(v) == horizon) reaches = true;
            for (const auto& w : space.neighbors(v)) {
                auto it = dist.find(w);
                if (it == dist.end() || it->second < r) continue;
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        if (reaches) ++count;
    }
    return count;
}

}  // namespace oracle

#endif  // COARSE_TEST_ORACLES_HPP
