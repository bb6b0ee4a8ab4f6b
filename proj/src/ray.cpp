#include "coarse/ray.hpp"

#include <algorithm>

namespace coarse {

VertexRay::VertexRay(std::vector<VertexId> consecutive, Extension extend) : extend_(std::move(extend)) {
    if (consecutive.empty()) throw InputError("a ray needs at least its root sample");
    samples_.reserve(consecutive.size());
    for (std::size_t i = 0; i < consecutive.size(); ++i) {
        samples_.push_back({static_cast<std::int64_t>(i), std::move(consecutive[i])});
    }
}

VertexRay VertexRay::sparse(std::vector<RaySample> samples, Extension extend) {
    if (samples.empty()) throw InputError("a ray needs at least its root sample");
    if (samples.front().index != 0) throw InputError("ray samples must start at index 0");
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].index <= samples[i - 1].index) throw InputError("ray sample indices must increase");
    }
    VertexRay r;
    r.samples_ = std::move(samples);
    r.extend_ = std::move(extend);
    return r;
}

std::optional<VertexId> VertexRay::at(std::int64_t t) const {
    if (t < 0) return std::nullopt;
    if (t <= last_index()) {
        auto it = std::lower_bound(samples_.begin(), samples_.end(), t,
                                   [](const RaySample& s, std::int64_t x) { return s.index < x; });
        if (it != samples_.end() && it->index == t) return it->vertex;
        if (!extend_) return std::nullopt;
    }
    if (extend_) return extend_(t);
    return std::nullopt;
}

VertexRay VertexRay::extended_to(std::int64_t t) const {
    if (!extend_) throw HorizonError("ray has no extension rule");
    VertexRay r = *this;
    for (auto i = last_index() + 1; i <= t; ++i) r.samples_.push_back({i, extend_(i)});
    return r;
}

std::vector<VertexId> VertexRay::vertices() const {
    std::vector<VertexId> out;
    out.reserve(samples_.size());
    for (const auto& s : samples_) out.push_back(s.vertex);
    return out;
}

ProperWindow properness_window(const SpaceOracle& space, const VertexRay& ray, const VertexId& x0,
                               Radius r_max) {
    ProperWindow w;
    w.last_inside.assign(static_cast<std::size_t>(r_max + 1), -1);
    const auto& samples = ray.samples();
    for (const auto& s : samples) {
        const auto d = x0 == space.basepoint() ? space.depth(s.vertex) : distance(space, x0, s.vertex);
        for (Radius r = d; r <= r_max; ++r) w.last_inside[static_cast<std::size_t>(r)] = s.index;
    }
    w.certified = std::all_of(w.last_inside.begin(), w.last_inside.end(),
                              [&](std::int64_t t) { return t < ray.last_index(); });
    return w;
}

VertexRay periodic_geodesic_ray(const SpaceOracle& tree, const std::vector<std::int32_t>& pattern,
                                std::int64_t length) {
    if (pattern.empty()) throw InputError("empty ray pattern");
    const auto kind = tree.kind();
    std::function<VertexId(std::int64_t)> at;
    if (kind == SpaceKind::Line || kind == SpaceKind::HalfLine) {
        const int dir = pattern.front() < 0 ? -1 : 1;
        if (kind == SpaceKind::HalfLine && dir < 0) throw InputError("half-line rays must move right");
        at = [dir](std::int64_t t) { return VertexId{static_cast<std::int32_t>(dir * t)}; };
    } else if (kind == SpaceKind::RegularTree || kind == SpaceKind::FreeGroup) {
        at = [pattern](std::int64_t t) {
            VertexId v;
            v.key.reserve(static_cast<std::size_t>(t));
            for (std::int64_t i = 0; i < t; ++i) v.key.push_back(pattern[static_cast<std::size_t>(i) % pattern.size()]);
            return v;
        };
        // Validate one full period past the first letter.
        if (!tree.contains(at(static_cast<std::int64_t>(2 * pattern.size() + 1)))) {
            throw InputError("pattern does not describe a geodesic in " + tree.kind_name());
        }
    } else {
        throw InputError("periodic geodesic rays need a line or word tree, got " + tree.kind_name());
    }
    std::vector<VertexId> v;
    for (std::int64_t t = 0; t <= length; ++t) v.push_back(at(t));
    return VertexRay(std::move(v), at);
}

}  // namespace coarse
