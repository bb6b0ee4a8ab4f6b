#ifndef COARSE_CONES_HPP
#define COARSE_CONES_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "coarse/ends.hpp"
#include "coarse/space.hpp"

namespace coarse {

using Rational = boost::multiprecision::cpp_rational;

// Points and edges in R^n with rational coordinates. Higher simplices are
// accepted but only their edges are kept.
struct FiniteComplex {
    std::size_t dimension = 1;
    std::vector<std::vector<Rational>> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    void validate() const;
    // {"dimension": 1, "vertices": [["0"], ["1/2"]], "simplices": [[0, 1]]}
    // Coordinates may be integers, decimal strings or "p/q" strings.
    static FiniteComplex from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;
};

// Union-find over the edges; components listed by least vertex, each sorted.
std::vector<std::vector<std::size_t>> complex_components(const FiniteComplex& x);

// The point (h x, h) of the cone over X.
struct ConePoint {
    std::vector<Rational> base;
    Rational height;
};

Rational cone_distance_squared(const ConePoint& p, const ConePoint& q);
double cone_distance(const ConePoint& p, const ConePoint& q);

// h -> (h x, h) for h >= r, clamped to (r x, r) below r.
ConePoint point_ray(const std::vector<Rational>& x, const Rational& r, std::int64_t h);

struct ConeMesh {
    SpacePtr graph;                  // finite graph, basepoint "apex"
    Rational link_squared;           // squared link length
    std::int64_t layers = 0;         // layers 1..layers above the apex
    std::size_t points = 0;
    std::vector<std::string> coarse_layers;  // layers whose spacing exceeded the link
};

// Integer layers h = 1..layers over an apex at h = 0. Layer h carries every
// vertex of X and ceil(mesh * h * |e|) - 1 interior points per edge e. Two
// points on the same or adjacent layers are joined when their cone distance
// is at most sqrt(1 + max |x|^2), the length of one vertical step over the
// farthest vertex.
ConeMesh cone_mesh(const FiniteComplex& x, std::int64_t layers, double mesh);

struct ConeReport {
    std::size_t components = 0;        // |pi_0(X)|
    EndCount ends;
    std::vector<std::size_t> counts;   // ends profile, R = 1..r_max
    std::size_t mesh_points = 0;
    bool rays_separated = false;       // one point ray per component, distinct end components at r_max
    bool mesh_ok = false;
    bool passes = false;
    std::string note;
};

ConeReport verify_cone_bijection(const FiniteComplex& x, Radius r_max, Radius horizon, double mesh = 1.0);

}  // namespace coarse

#endif  // COARSE_CONES_HPP
