#ifndef COARSE_RAY_HPP
#define COARSE_RAY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "coarse/space.hpp"

namespace coarse {

struct RaySample {
    std::int64_t index;
    VertexId vertex;
};

// A discrete ray Z>=0 -> vertices, known on a finite list of samples and,
// optionally, through a deterministic extension rule beyond them.
class VertexRay {
public:
    using Extension = std::function<VertexId(std::int64_t)>;

    VertexRay() = default;
    // Samples at consecutive indices 0, 1, 2, ...
    explicit VertexRay(std::vector<VertexId> consecutive, Extension extend = {});
    // Samples at strictly increasing indices starting from 0.
    static VertexRay sparse(std::vector<RaySample> samples, Extension extend = {});

    const VertexId& root() const { return samples_.front().vertex; }
    const std::vector<RaySample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    std::int64_t last_index() const { return samples_.back().index; }
    bool consecutive() const { return samples_.back().index + 1 == static_cast<std::int64_t>(samples_.size()); }

    // Value at index t: a stored sample, or the extension rule past the end.
    std::optional<VertexId> at(std::int64_t t) const;
    // Copy with stored samples extended (via the rule) up to index t.
    VertexRay extended_to(std::int64_t t) const;

    std::vector<VertexId> vertices() const;

private:
    std::vector<RaySample> samples_;
    Extension extend_;
};

// Properness evidence on a window: for every R <= r_max, the last sample
// index inside ball(x0, R). The ray is certified proper on the window when
// each of those indices is followed by at least one later sample.
struct ProperWindow {
    std::vector<std::int64_t> last_inside;  // indexed by R = 0..r_max; -1 if never inside
    bool certified = false;
};
ProperWindow properness_window(const SpaceOracle& space, const VertexRay& ray, const VertexId& x0,
                               Radius r_max);

// The geodesic ray through the given sequence of child steps on a word tree,
// e.g. {0} on a regular tree walks child 0 forever. The pattern repeats.
VertexRay periodic_geodesic_ray(const SpaceOracle& tree, const std::vector<std::int32_t>& pattern,
                                std::int64_t length);

}  // namespace coarse

#endif  // COARSE_RAY_HPP
