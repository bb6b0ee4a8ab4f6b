#ifndef COARSE_SPACE_HPP
#define COARSE_SPACE_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coarse/vertex.hpp"

namespace coarse {

using Radius = std::int64_t;

inline constexpr Radius kUnboundedHorizon = std::numeric_limits<std::int32_t>::max();

enum class SpaceKind { Line, HalfLine, Grid, RegularTree, FreeGroup, HairyTree, Staircase, Finite };

// Lazy, locally finite graph with a basepoint. Immutable after construction;
// every query is a pure function of its arguments.
class SpaceOracle {
public:
    virtual ~SpaceOracle() = default;

    virtual SpaceKind kind() const = 0;
    // Canonical kind string, e.g. "grid-2" or "regular-tree-4".
    virtual std::string kind_name() const = 0;
    virtual VertexId basepoint() const = 0;
    virtual std::vector<VertexId> neighbors(const VertexId& v) const = 0;
    virtual std::size_t degree_bound() const = 0;
    virtual bool contains(const VertexId& v) const = 0;

    virtual std::string format(const VertexId& v) const = 0;
    virtual VertexId parse(std::string_view text) const = 0;

    // Exact distance when the kind admits a closed form; nullopt otherwise.
    virtual std::optional<Radius> closed_form_distance(const VertexId&, const VertexId&) const {
        return std::nullopt;
    }
    // Distance from the basepoint. Default is a BFS bounded by the horizon.
    virtual Radius depth(const VertexId& v) const;

    virtual bool is_tree() const { return false; }

    // Outer radius at which "meets the outer sphere" faithfully stands in for
    // "unbounded" when complements of balls up to r_max are analysed.
    virtual Radius suggested_horizon(Radius r_max) const { return 3 * r_max; }

    // Radius about the basepoint within which enumeration is exact.
    Radius horizon() const { return horizon_; }

    // Canonical {"kind":..., "params":{...}} document describing this oracle.
    virtual nlohmann::json spec() const = 0;

protected:
    explicit SpaceOracle(Radius horizon) : horizon_(horizon) {}

private:
    Radius horizon_;
};

using SpacePtr = std::shared_ptr<const SpaceOracle>;

// Constructors for the shipped kinds.
SpacePtr make_line(Radius horizon = kUnboundedHorizon);
SpacePtr make_halfline(Radius horizon = kUnboundedHorizon);
SpacePtr make_grid(int dimension, Radius horizon = kUnboundedHorizon);
SpacePtr make_regular_tree(int degree, Radius horizon = kUnboundedHorizon);
SpacePtr make_free_group(int rank, Radius horizon = kUnboundedHorizon);

// Finite rooted tree given by a parent array (parents[0] = -1, parents[i] < i)
// with an infinite path attached at each listed core vertex. Its ends are the
// hairs. Vertices format as "v3" (core) and "h1.7" (hair 1, 7 steps out).
SpacePtr make_hairy_tree(std::vector<std::int32_t> parents, std::vector<std::int32_t> hairs,
                         Radius horizon = kUnboundedHorizon);

enum class StepRule { Squared, Constant };
// Two rays joined at a root, with step(n) carrying n*n edges (Squared) or a
// single edge (Constant), truncated at height n_max.
SpacePtr make_staircase(int n_max, StepRule rule = StepRule::Squared,
                        Radius horizon = kUnboundedHorizon);

struct EdgeListOptions {
    std::optional<std::string> basepoint;
    std::optional<std::size_t> max_degree;
    Radius horizon = kUnboundedHorizon;
};
// Undirected simple graph; duplicate edges and self loops are dropped.
SpacePtr make_finite(const std::vector<std::pair<std::string, std::string>>& edges,
                     const EdgeListOptions& options = {});
// Adjacency-list form; rejects asymmetric lists.
SpacePtr make_finite_adjacency(const std::vector<std::pair<std::string, std::vector<std::string>>>& adjacency,
                               const EdgeListOptions& options = {});
// Plain-text edge list: one "u v" pair per line, '#' starts a comment.
SpacePtr load_edge_list(const std::string& path, const EdgeListOptions& options = {});

// Build from a JSON space-spec:
//   {"kind":"line"}  {"kind":"grid-2"}  {"kind":"grid","params":{"n":2}}
//   {"kind":"staircase","params":{"n_max":200,"step_rule":"squared"}}
//   {"kind":"finite-file","path":"g.txt"}
//   {"kind":"finite","params":{"edges":[["a","b"],...],"basepoint":"a"}}
SpacePtr build_space(const nlohmann::json& spec);

// Exact path distance. Both vertices must lie within the oracle horizon.
Radius distance(const SpaceOracle& space, const VertexId& u, const VertexId& v);

// Vertices at distance <= r from center, sorted.
std::vector<VertexId> ball(const SpaceOracle& space, const VertexId& center, Radius r);

// A shortest path from u to v. Where geodesics are not unique, each step moves
// to the least neighbour (in VertexId order) that is one closer to v.
std::vector<VertexId> geodesic(const SpaceOracle& space, const VertexId& u, const VertexId& v);

struct OutsideComponent {
    std::vector<VertexId> vertices;  // sorted
    bool unbounded = false;          // meets the sphere of radius `horizon`
};

// Partition of ball(center, horizon) minus ball(center, r) into connected
// components, each flagged unbounded iff it meets the outer sphere.
std::vector<OutsideComponent> components_outside(const SpaceOracle& space, const VertexId& center,
                                                 Radius r, Radius horizon);

// Graphviz rendering of ball(center, r).
std::string export_dot(const SpaceOracle& space, const VertexId& center, Radius r);

}  // namespace coarse

#endif  // COARSE_SPACE_HPP
