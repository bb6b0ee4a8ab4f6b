#ifndef COARSE_COARSEMAPS_HPP
#define COARSE_COARSEMAPS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "coarse/ray.hpp"
#include "coarse/space.hpp"

namespace coarse {

// Finite restriction of a map f: X -> Y, as (input, output) pairs.
// Verdicts computed from a trace are evidence about the sampled window only.
struct MapTrace {
    SpacePtr domain;
    SpacePtr codomain;
    std::vector<std::pair<VertexId, VertexId>> pairs;

    // Throws InputError if an input appears twice.
    void validate() const;
    std::optional<VertexId> image(const VertexId& x) const;
};

// Builds the trace of `f` over the given inputs.
template <class F>
MapTrace trace_map(SpacePtr domain, SpacePtr codomain, const std::vector<VertexId>& inputs, F&& f) {
    MapTrace t{std::move(domain), std::move(codomain), {}};
    t.pairs.reserve(inputs.size());
    for (const auto& x : inputs) t.pairs.emplace_back(x, f(x));
    return t;
}

struct ModulusRow {
    Radius r = 0;
    Radius modulus = 0;                 // S(R) over the whole trace
    std::vector<Radius> by_window;      // S(R) restricted to nested sub-windows
    bool stable = false;                // constant over the trailing half of windows
};

struct ControlReport {
    std::vector<Radius> windows;        // nested window radii about the first input
    std::vector<ModulusRow> rows;
    bool controlled_on_trace = false;
};

// S(R) = max d_Y(f x, f x') over traced pairs with d_X(x, x') < R. Divergence
// evidence: S(R) still growing as the window widens.
ControlReport check_controlled(const MapTrace& f, const std::vector<Radius>& radii);

struct TargetBall {
    VertexId center;
    Radius radius = 0;
};

struct PreimageRow {
    TargetBall ball;
    std::size_t preimage_size = 0;
    Radius diameter = 0;                // of f^-1(ball) within the trace
    std::vector<Radius> by_window;
    bool stable = false;
};

struct ProperReport {
    std::vector<Radius> windows;
    std::vector<PreimageRow> rows;
    bool proper_on_trace = false;
};

ProperReport check_proper(const MapTrace& f, const std::vector<TargetBall>& balls);

// sup over common inputs of d_Y(f x, g x).
Radius check_close(const MapTrace& f, const MapTrace& g);

struct AffineBound {
    double a = 0.0;
    double b = 0.0;
};

// Certified (A, B) with d_Y <= A d_X + B on every traced pair. A is the
// largest slope among far pairs (d_X at least half the trace diameter), B the
// smallest offset making the bound hold everywhere.
AffineBound estimate_affine_bound(const MapTrace& f);

// Number of traced pairs violating d_Y <= A d_X + B.
std::size_t affine_violations(const MapTrace& f, const AffineBound& bound);

// Largest observed d_Y / d_X over distinct traced inputs.
double max_ratio(const MapTrace& f);

struct InterpolatedRay {
    VertexRay ray;                      // unit steps along edges
    std::vector<std::int64_t> matched;  // output index of each input sample
    Radius input_step = 0;              // max distance between consecutive inputs
    Radius closeness = 0;               // max d(out(m), in(segment start of m))
    Radius reroot_prefix = 0;           // length of the prefix from x0, if rerooted
};

// Joins consecutive samples by geodesics (least-neighbour tie break). When x0
// is given, the geodesic from x0 to the first sample is prefixed. An
// extension rule on the input is carried over with an index shift, which
// assumes the input moves in unit steps past its samples.
InterpolatedRay geodesic_interpolate(const VertexRay& ray, const SpaceOracle& space,
                                     const std::optional<VertexId>& x0 = std::nullopt);

}  // namespace coarse

#endif  // COARSE_COARSEMAPS_HPP
