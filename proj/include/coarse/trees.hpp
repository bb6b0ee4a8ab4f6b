#ifndef COARSE_TREES_HPP
#define COARSE_TREES_HPP

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coarse/ends.hpp"
#include "coarse/homotopy.hpp"
#include "coarse/ray.hpp"
#include "coarse/space.hpp"

namespace coarse {

// Rooted view of an acyclic space. The constructor re-checks acyclicity on
// ball(root, check_radius): every non-root vertex has exactly one neighbour
// one step closer to the root and none at its own depth.
class TreeOracle {
public:
    explicit TreeOracle(SpacePtr space, Radius check_radius = 6);

    const SpaceOracle& space() const { return *space_; }
    SpacePtr space_ptr() const { return space_; }
    const VertexId& root() const { return root_; }

    Radius depth(const VertexId& v) const;
    std::optional<VertexId> parent(const VertexId& v) const;  // nullopt at the root
    VertexId ancestor(const VertexId& v, Radius h) const;      // the ancestor at depth h
    std::vector<VertexId> root_path(const VertexId& v) const;  // root first

private:
    SpacePtr space_;
    VertexId root_;
};

// The unique simple path from u to v.
std::vector<VertexId> tree_geodesic(const TreeOracle& tree, const VertexId& u, const VertexId& v);

// Deepest common vertex of the root paths of u and v.
VertexId meet(const TreeOracle& tree, const VertexId& u, const VertexId& v);

// A root-based geodesic ray: vertices[h] sits at depth h.
struct GeodesicRayChain {
    VertexId root;
    std::vector<VertexId> vertices;
    VertexRay::Extension extend;  // h -> chain vertex past the stored ones

    Radius length() const { return static_cast<Radius>(vertices.size()) - 1; }
    std::optional<VertexId> at(Radius h) const;
    VertexRay ray() const;
};

struct ChainExtraction {
    std::optional<GeodesicRayChain> chain;  // absent when the boundary is ambiguous
    Radius boundary_depth = 0;              // deepest image depth in the window
    std::int64_t boundary_index = 0;        // first index reaching that depth on the chain
    std::vector<VertexId> boundary_vertices;
    bool contained = false;                 // chain vertices all lie in the sampled image
    bool order_convex = false;              // consecutive chain vertices are parent and child
    int extensions = 0;                     // window doublings used to disambiguate
    std::string note;
};

// The root-rooted chain inside the image of a unit-step ray alpha_star that
// starts at the root. The window boundary is the deepest image depth. If two
// image vertices share that depth, the window is widened through the ray's
// extension rule; if that does not separate them the result is ambiguous.
// Throws InputError when the ray does not end on the boundary (properness
// evidence fails on the window).
ChainExtraction underlying_geodesic_ray(const TreeOracle& tree, const VertexRay& alpha_star);

struct Pi0Verdict {
    EndRelation relation = EndRelation::Inconclusive;
    Radius compared_height = 0;              // min of the two chain lengths
    std::optional<Radius> divergence_height; // greatest h with r(h) = r'(h), when different
    std::optional<GeodesicRayChain> first, second;
    std::string note;
};

// Interpolates and reroots both rays at the tree root, extracts their chains
// and compares them up to the shorter one.
Pi0Verdict pi0_equivalent(const TreeOracle& tree, const VertexRay& alpha, const VertexRay& beta);

struct HomotopyWitness {
    LatticeHomotopy phi;             // column 0 is alpha_star, diagonal the chain
    Radius lipschitz = 1;            // A
    Radius reroot_prefix = 0;
    ControlCertificate certificate;
    bool row_bound_ok = false;       // same_row <= (A + 1) R for every tested R
    bool column_bound_ok = false;    // same_column < 2 A R for every tested R
    bool passes = false;             // row bound and properness evidence
};

struct WitnessOptions {
    std::optional<std::int64_t> height;       // default: last index of the interpolated ray
    std::vector<Radius> radii{1, 2, 3, 4, 5};
    std::vector<Radius> target_radii{1, 2, 3};  // balls about the root
};

// phi(i, h) = the point at distance a - (A+1) i from r(h) toward alpha_star(h)
// while (A+1) i <= a, else r(h); a = d(r(h), alpha_star(h)).
HomotopyWitness homotopy_witness(const TreeOracle& tree, const VertexRay& alpha, const WitnessOptions& options = {});

struct SixPointResult {
    std::array<bool, 5> hypothesis{};
    bool hypotheses_hold = false;
    Radius gap = 0;  // d(x2, y2)
};

// Evaluates the five hypotheses literally, with points at vertices.
SixPointResult six_point_gap(const TreeOracle& tree, const VertexId& x1, const VertexId& x2, const VertexId& x3,
                             const VertexId& y1, const VertexId& y2, const VertexId& y3, Radius r);

// ---------------------------------------------------------------------------
// Generators for randomized checks.

struct RandomTreeOptions {
    std::size_t core_vertices = 100;
    std::size_t max_degree = 4;
    std::size_t hairs = 0;
};
// A random hairy tree (see make_hairy_tree). Hairs attach at distinct core
// vertices with spare degree, deepest first among a random sample.
SpacePtr random_hairy_tree(std::mt19937_64& rng, const RandomTreeOptions& options);

// Geodesic ray from the root of a hairy tree out along hair j.
VertexRay hair_ray(const TreeOracle& tree, std::int32_t hair, std::int64_t length);

// Follows the geodesic spine up to height `length`, inserting at each spine
// vertex (except the last max_detour + 1) an out-and-back detour of 1..max_detour edges
// with probability 1/2. Past the stored samples it continues along the spine.
VertexRay detour_ray(const TreeOracle& tree, const VertexRay& spine, std::int64_t length, int max_detour,
                     std::mt19937_64& rng);

}  // namespace coarse

#endif  // COARSE_TREES_HPP
