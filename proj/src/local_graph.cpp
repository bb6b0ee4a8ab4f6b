#include "coarse/local_graph.hpp"

#include <deque>
#include <numeric>

namespace coarse {

LocalGraph::LocalGraph(const SpaceOracle& space, const VertexId& center, Radius radius)
    : radius_(radius) {
    if (radius < 0) throw InputError("negative radius");
    if (radius > space.horizon()) {
        throw HorizonError("radius " + std::to_string(radius) + " exceeds oracle horizon " +
                           std::to_string(space.horizon()));
    }
    if (!space.contains(center)) throw InputError("center is not a vertex of the space");

    vertices_.push_back(center);
    dist_.push_back(0);
    index_.emplace(center, 0);
    adj_.emplace_back();

    for (std::size_t head = 0; head < vertices_.size(); ++head) {
        const Radius d = dist_[head];
        auto nbrs = space.neighbors(vertices_[head]);
        for (auto& w : nbrs) {
            auto it = index_.find(w);
            std::int32_t wi;
            if (it == index_.end()) {
                if (d + 1 > radius_) continue;
                wi = static_cast<std::int32_t>(vertices_.size());
                index_.emplace(w, wi);
                vertices_.push_back(std::move(w));
                dist_.push_back(d + 1);
                adj_.emplace_back();
            } else {
                wi = it->second;
            }
            adj_[head].push_back(wi);
        }
    }
}

std::optional<std::int32_t> LocalGraph::find(const VertexId& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::int32_t> LocalGraph::outside_labels(Radius r, int k) const {
    const auto n = vertices_.size();
    std::vector<std::int32_t> label(n, -1);
    std::int32_t next = 0;
    std::vector<std::int32_t> stack;
    // Scratch for k-neighbourhood expansion.
    std::vector<std::int32_t> seen_at(n, -1);
    std::vector<std::int32_t> frontier, next_frontier;

    for (std::size_t s = 0; s < n; ++s) {
        if (dist_[s] <= r || label[s] >= 0) continue;
        label[s] = next;
        stack.assign(1, static_cast<std::int32_t>(s));
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            if (k <= 1) {
                for (auto w : adj_[static_cast<std::size_t>(v)]) {
                    if (dist_[static_cast<std::size_t>(w)] > r && label[static_cast<std::size_t>(w)] < 0) {
                        label[static_cast<std::size_t>(w)] = next;
                        stack.push_back(w);
                    }
                }
                continue;
            }
            // Vertices within k hops of v, allowed to pass through the ball.
            frontier.assign(1, v);
            seen_at[static_cast<std::size_t>(v)] = v;
            std::vector<std::int32_t> touched{v};
            for (int step = 0; step < k; ++step) {
                next_frontier.clear();
                for (auto x : frontier) {
                    for (auto w : adj_[static_cast<std::size_t>(x)]) {
                        if (seen_at[static_cast<std::size_t>(w)] == v) continue;
                        seen_at[static_cast<std::size_t>(w)] = v;
                        touched.push_back(w);
                        next_frontier.push_back(w);
                        if (dist_[static_cast<std::size_t>(w)] > r && label[static_cast<std::size_t>(w)] < 0) {
                            label[static_cast<std::size_t>(w)] = next;
                            stack.push_back(w);
                        }
                    }
                }
                frontier.swap(next_frontier);
            }
            for (auto t : touched) seen_at[static_cast<std::size_t>(t)] = -1;
        }
        ++next;
    }
    return label;
}

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

std::size_t UnionFind::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return a;
}

}  // namespace coarse
