#ifndef COARSE_HOMOTOPY_HPP
#define COARSE_HOMOTOPY_HPP

#include <functional>
#include <vector>

#include "coarse/ray.hpp"
#include "coarse/space.hpp"

namespace coarse {

// A map on the triangular lattice {(i, h) : 0 <= i <= h <= H}, standing for a
// coarse 1-path on the truncated cone over [0, 1]. Row h holds h + 1 values;
// column 0 is the first end ray and the diagonal the second.
class LatticeHomotopy {
public:
    LatticeHomotopy() = default;
    explicit LatticeHomotopy(std::vector<std::vector<VertexId>> rows);

    template <class F>
    static LatticeHomotopy tabulate(std::int64_t height, F&& f) {
        std::vector<std::vector<VertexId>> rows(static_cast<std::size_t>(height + 1));
        for (std::int64_t h = 0; h <= height; ++h) {
            auto& row = rows[static_cast<std::size_t>(h)];
            row.reserve(static_cast<std::size_t>(h + 1));
            for (std::int64_t i = 0; i <= h; ++i) row.push_back(f(i, h));
        }
        return LatticeHomotopy(std::move(rows));
    }

    std::int64_t height() const { return static_cast<std::int64_t>(rows_.size()) - 1; }
    const VertexId& at(std::int64_t i, std::int64_t h) const {
        return rows_[static_cast<std::size_t>(h)][static_cast<std::size_t>(i)];
    }
    const std::vector<VertexId>& row(std::int64_t h) const { return rows_[static_cast<std::size_t>(h)]; }

    std::vector<VertexId> first_end() const;   // (0, h)
    std::vector<VertexId> second_end() const;  // (h, h)

private:
    std::vector<std::vector<VertexId>> rows_;
};

// (i, h) -> alpha(h).
LatticeHomotopy path_constant(const VertexRay& alpha, std::int64_t height);
// (i, h) -> phi(h - i, h).
LatticeHomotopy path_inverse(const LatticeHomotopy& phi);
// (i, h) -> phi(2i, h) while 2i <= h, then psi(2i - h, h). Requires the second
// end of phi to equal the first end of psi.
LatticeHomotopy path_concat(const LatticeHomotopy& phi, const LatticeHomotopy& psi);

struct FamilyBound {
    Radius r = 0;
    Radius same_row = 0;     // max d over pairs (i,h),(i',h) with |i - i'| < r
    Radius same_column = 0;  // max d over pairs (i,h),(i,h') with |h - h'| < r
};

struct BallPreimage {
    VertexId center;
    Radius radius = 0;
    std::size_t points = 0;
    std::int64_t min_height = -1;   // -1 when the preimage is empty
    std::int64_t max_height = -1;
    Radius lattice_diameter = 0;    // max over preimage pairs of |h-h'| + |i-i'|
    bool confined = true;           // preimage stays below the top row
};

struct ControlCertificate {
    std::int64_t window = 0;        // lattice height H
    std::vector<FamilyBound> bounds;
    std::vector<BallPreimage> preimages;
    bool proper_evidence = true;    // every preimage confined
};

struct TargetSpec {
    VertexId center;
    Radius radius = 0;
};

// Exact scan of the two generating families of controlled sets plus preimage
// height bands of the target balls.
ControlCertificate check_lattice_map(const SpaceOracle& space, const LatticeHomotopy& phi,
                                     const std::vector<Radius>& radii, const std::vector<TargetSpec>& targets);

}  // namespace coarse

#endif  // COARSE_HOMOTOPY_HPP
