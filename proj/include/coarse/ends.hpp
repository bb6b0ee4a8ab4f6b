#ifndef COARSE_ENDS_HPP
#define COARSE_ENDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "coarse/ray.hpp"
#include "coarse/space.hpp"

namespace coarse {

struct EndComponent {
    VertexId representative;  // least vertex of the component
    VertexId witness;         // least vertex of the component on the outer sphere
    std::size_t size = 0;
};

struct EndsLevel {
    Radius r = 0;
    std::vector<EndComponent> components;  // unbounded components only
};

struct EndsProfile {
    VertexId basepoint;
    Radius horizon = 0;
    std::vector<EndsLevel> levels;  // r = 1..r_max

    std::vector<std::size_t> counts() const;
};

// Census of unbounded components of the complement of the open ball
// {v : d(x0, v) < R} for R = 1..r_max, "unbounded" meaning "meets the sphere
// of radius horizon". On regular-tree-d this gives d * (d-1)^(R-1).
EndsProfile ends_profile(const SpaceOracle& space, const VertexId& x0, Radius r_max, Radius horizon);

inline constexpr std::size_t kMinStabilizationRadii = 10;

struct EndCount {
    std::optional<std::size_t> stabilized;  // set when the trailing half agrees
    std::vector<std::size_t> sequence;      // observed counts, r = 1..r_max
    bool growing() const { return !stabilized; }
};

// Throws InputError for profiles shorter than kMinStabilizationRadii, unless
// the counts strictly increase throughout, which is reported as growth.
EndCount stabilized_end_count(const EndsProfile& profile);

enum class EndRelation { Same, Different, Inconclusive };

std::string to_string(EndRelation r);

struct EndWitness {
    Radius r = 0;
    std::int64_t from_t = 0;     // first tested tail index
    std::int64_t to_t = 0;       // last tested tail index
    bool connected = false;      // every tested pair joined by a k-path outside the ball
    std::optional<std::int64_t> separating_t;
    std::vector<VertexId> example_path;  // k-path for the first tested index, if found
};

struct EndVerdict {
    EndRelation relation = EndRelation::Inconclusive;
    std::vector<EndWitness> witnesses;  // one per tested radius
    std::string note;
};

struct SameEndOptions {
    int k = 1;
    std::optional<Radius> horizon;       // default: space.suggested_horizon(r_max)
    bool keep_paths = true;
};

// k-path criterion for two rays, tested at every R = 1..r_max about the
// basepoint: some T past which r(t) and r'(t) are joined by a k-path avoiding
// ball(x0, R).
EndVerdict same_end(const SpaceOracle& space, const VertexRay& r1, const VertexRay& r2, Radius r_max,
                    const SameEndOptions& options = {});

// Geodesic rays from x0 into each unbounded component at radius r: BFS parent
// chains from x0 to that component's witness.
std::vector<std::vector<VertexId>> geodesic_representatives(const SpaceOracle& space, const VertexId& x0,
                                                            Radius r, Radius horizon);

}  // namespace coarse

#endif  // COARSE_ENDS_HPP
