#ifndef COARSE_LOCAL_GRAPH_HPP
#define COARSE_LOCAL_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coarse/space.hpp"

namespace coarse {

// Dense snapshot of ball(center, radius): vertices in BFS order, their
// distances from the center and adjacency restricted to the ball.
class LocalGraph {
public:
    LocalGraph(const SpaceOracle& space, const VertexId& center, Radius radius);

    const VertexId& center() const { return vertices_.front(); }
    Radius radius() const { return radius_; }
    std::size_t size() const { return vertices_.size(); }

    const VertexId& vertex(std::int32_t i) const { return vertices_[static_cast<std::size_t>(i)]; }
    Radius dist(std::int32_t i) const { return dist_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int32_t>& adjacent(std::int32_t i) const {
        return adj_[static_cast<std::size_t>(i)];
    }
    std::optional<std::int32_t> find(const VertexId& v) const;

    // Component labels of {v : dist(v) > r}; -1 for vertices inside the ball.
    // With k > 1 two vertices are linked when their distance is at most k,
    // measured inside the snapshot.
    std::vector<std::int32_t> outside_labels(Radius r, int k = 1) const;

private:
    std::vector<VertexId> vertices_;
    std::vector<Radius> dist_;
    std::vector<std::vector<std::int32_t>> adj_;
    std::unordered_map<VertexId, std::int32_t, VertexIdHash> index_;
    Radius radius_;
};

class UnionFind {
public:
    explicit UnionFind(std::size_t n);
    std::size_t find(std::size_t x);
    // Returns the surviving root.
    std::size_t unite(std::size_t a, std::size_t b);

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint32_t> rank_;
};

}  // namespace coarse

#endif  // COARSE_LOCAL_GRAPH_HPP
