#include "coarse/homotopy.hpp"

#include <algorithm>
#include <unordered_map>

namespace coarse {

LatticeHomotopy::LatticeHomotopy(std::vector<std::vector<VertexId>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw InputError("lattice homotopy needs at least row 0");
    for (std::size_t h = 0; h < rows_.size(); ++h) {
        if (rows_[h].size() != h + 1) {
            throw InputError("row " + std::to_string(h) + " has " + std::to_string(rows_[h].size()) +
                             " values, expected " + std::to_string(h + 1));
        }
    }
}

std::vector<VertexId> LatticeHomotopy::first_end() const {
    std::vector<VertexId> out;
    for (const auto& r : rows_) out.push_back(r.front());
    return out;
}

std::vector<VertexId> LatticeHomotopy::second_end() const {
    std::vector<VertexId> out;
    for (const auto& r : rows_) out.push_back(r.back());
    return out;
}

LatticeHomotopy path_constant(const VertexRay& alpha, std::int64_t height) {
    std::vector<VertexId> column;
    for (std::int64_t h = 0; h <= height; ++h) {
        auto v = alpha.at(h);
        if (!v) throw HorizonError("ray undefined at height " + std::to_string(h));
        column.push_back(std::move(*v));
    }
    return LatticeHomotopy::tabulate(height, [&](std::int64_t, std::int64_t h) {
        return column[static_cast<std::size_t>(h)];
    });
}

LatticeHomotopy path_inverse(const LatticeHomotopy& phi) {
    return LatticeHomotopy::tabulate(phi.height(), [&](std::int64_t i, std::int64_t h) { return phi.at(h - i, h); });
}

LatticeHomotopy path_concat(const LatticeHomotopy& phi, const LatticeHomotopy& psi) {
    const auto height = std::min(phi.height(), psi.height());
    for (std::int64_t h = 0; h <= height; ++h) {
        if (phi.at(h, h) != psi.at(0, h)) {
            throw InputError("end ray mismatch at height " + std::to_string(h));
        }
    }
    return LatticeHomotopy::tabulate(height, [&](std::int64_t i, std::int64_t h) {
        return 2 * i <= h ? phi.at(2 * i, h) : psi.at(2 * i - h, h);
    });
}

ControlCertificate check_lattice_map(const SpaceOracle& space, const LatticeHomotopy& phi,
                                     const std::vector<Radius>& radii, const std::vector<TargetSpec>& targets) {
    const auto H = phi.height();
    ControlCertificate cert;
    cert.window = H;

    std::unordered_map<VertexId, std::unordered_map<VertexId, Radius, VertexIdHash>, VertexIdHash> memo;
    auto d = [&](const VertexId& a, const VertexId& b) -> Radius {
        if (a == b) return 0;
        if (auto c = space.closed_form_distance(a, b)) return *c;
        const auto& lo = std::min(a, b);
        const auto& hi = std::max(a, b);
        auto& inner = memo[lo];
        auto it = inner.find(hi);
        if (it != inner.end()) return it->second;
        const auto value = distance(space, lo, hi);
        inner.emplace(hi, value);
        return value;
    };

    for (auto r : radii) {
        if (r <= 0) throw InputError("family radii must be positive");
        FamilyBound fb;
        fb.r = r;
        for (std::int64_t h = 0; h <= H; ++h) {
            for (std::int64_t i = 0; i <= h; ++i) {
                for (std::int64_t j = i + 1; j <= h && j - i < r; ++j) {
                    fb.same_row = std::max(fb.same_row, d(phi.at(i, h), phi.at(j, h)));
                }
                for (std::int64_t h2 = h + 1; h2 <= H && h2 - h < r; ++h2) {
                    fb.same_column = std::max(fb.same_column, d(phi.at(i, h), phi.at(i, h2)));
                }
            }
        }
        cert.bounds.push_back(fb);
    }

    for (const auto& t : targets) {
        BallPreimage p;
        p.center = t.center;
        p.radius = t.radius;
        std::vector<std::pair<std::int64_t, std::int64_t>> pts;
        for (std::int64_t h = 0; h <= H; ++h) {
            for (std::int64_t i = 0; i <= h; ++i) {
                if (d(phi.at(i, h), t.center) <= t.radius) pts.emplace_back(i, h);
            }
        }
        p.points = pts.size();
        if (!pts.empty()) {
            p.min_height = pts.front().second;
            p.max_height = pts.back().second;
            // l1 diameter in the plane: the larger spread of h + i and h - i.
            std::int64_t sum_lo = pts.front().first + pts.front().second, sum_hi = sum_lo;
            std::int64_t diff_lo = pts.front().second - pts.front().first, diff_hi = diff_lo;
            for (const auto& [i, h] : pts) {
                sum_lo = std::min(sum_lo, h + i);
                sum_hi = std::max(sum_hi, h + i);
                diff_lo = std::min(diff_lo, h - i);
                diff_hi = std::max(diff_hi, h - i);
            }
            const Radius diam = std::max(sum_hi - sum_lo, diff_hi - diff_lo);
            p.lattice_diameter = diam;
            p.confined = p.max_height < H;
        }
        cert.proper_evidence = cert.proper_evidence && p.confined;
        cert.preimages.push_back(p);
    }
    return cert;
}

}  // namespace coarse
