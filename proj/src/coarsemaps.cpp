#include "coarse/coarsemaps.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

namespace coarse {
namespace {

constexpr int kWindowCount = 6;

struct PairTables {
    std::vector<std::vector<Radius>> dx, dy;
    std::vector<Radius> depth;   // domain distance from the window center
    std::vector<Radius> windows;
};

PairTables tabulate(const MapTrace& f) {
    f.validate();
    const auto n = f.pairs.size();
    PairTables t;
    t.dx.assign(n, std::vector<Radius>(n, 0));
    t.dy.assign(n, std::vector<Radius>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            t.dx[i][j] = t.dx[j][i] = distance(*f.domain, f.pairs[i].first, f.pairs[j].first);
            t.dy[i][j] = t.dy[j][i] = distance(*f.codomain, f.pairs[i].second, f.pairs[j].second);
        }
    }
    const auto base = f.domain->basepoint();
    std::size_t center = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (f.pairs[i].first == base) center = i;
    }
    t.depth.resize(n);
    Radius widest = 0;
    for (std::size_t i = 0; i < n; ++i) {
        t.depth[i] = t.dx[center][i];
        widest = std::max(widest, t.depth[i]);
    }
    std::set<Radius> w;
    for (int k = 1; k <= kWindowCount; ++k) w.insert((widest * k + kWindowCount - 1) / kWindowCount);
    t.windows.assign(w.begin(), w.end());
    return t;
}

bool trailing_constant(const std::vector<Radius>& values) {
    if (values.empty()) return true;
    const auto from = values.size() / 2;
    return std::all_of(values.begin() + static_cast<std::ptrdiff_t>(from), values.end(),
                       [&](Radius v) { return v == values.back(); });
}

}  // namespace

void MapTrace::validate() const {
    if (!domain || !codomain) throw InputError("trace needs both a domain and a codomain");
    if (pairs.empty()) throw InputError("empty trace");
    std::set<VertexId> seen;
    for (const auto& [x, y] : pairs) {
        if (!seen.insert(x).second) throw InputError("trace is not functional: repeated input " + domain->format(x));
        if (!domain->contains(x)) throw InputError("trace input is not a domain vertex");
        if (!codomain->contains(y)) throw InputError("trace output is not a codomain vertex");
    }
}

std::optional<VertexId> MapTrace::image(const VertexId& x) const {
    for (const auto& [a, b] : pairs) {
        if (a == x) return b;
    }
    return std::nullopt;
}

ControlReport check_controlled(const MapTrace& f, const std::vector<Radius>& radii) {
    const auto t = tabulate(f);
    const auto n = f.pairs.size();
    ControlReport report;
    report.windows = t.windows;
    report.controlled_on_trace = true;
    for (auto r : radii) {
        if (r <= 0) throw InputError("control radii must be positive");
        ModulusRow row;
        row.r = r;
        for (auto w : t.windows) {
            Radius s = 0;
            bool any = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (t.depth[i] > w) continue;
                for (std::size_t j = i; j < n; ++j) {
                    if (t.depth[j] > w || t.dx[i][j] >= r) continue;
                    any = true;
                    s = std::max(s, t.dy[i][j]);
                }
            }
            if (!any) throw InputError("no traced pairs at radius " + std::to_string(r));
            row.by_window.push_back(s);
        }
        row.modulus = row.by_window.back();
        row.stable = trailing_constant(row.by_window);
        report.controlled_on_trace = report.controlled_on_trace && row.stable;
        report.rows.push_back(std::move(row));
    }
    return report;
}

ProperReport check_proper(const MapTrace& f, const std::vector<TargetBall>& balls) {
    const auto t = tabulate(f);
    const auto n = f.pairs.size();
    ProperReport report;
    report.windows = t.windows;
    report.proper_on_trace = true;
    for (const auto& b : balls) {
        if (f.codomain->depth(b.center) + b.radius > f.codomain->horizon()) {
            throw HorizonError("target ball leaves the codomain horizon");
        }
        std::vector<std::size_t> pre;
        for (std::size_t i = 0; i < n; ++i) {
            if (distance(*f.codomain, f.pairs[i].second, b.center) <= b.radius) pre.push_back(i);
        }
        PreimageRow row;
        row.ball = b;
        row.preimage_size = pre.size();
        for (auto w : t.windows) {
            Radius diam = 0;
            for (auto i : pre) {
                if (t.depth[i] > w) continue;
                for (auto j : pre) {
                    if (t.depth[j] <= w) diam = std::max(diam, t.dx[i][j]);
                }
            }
            row.by_window.push_back(diam);
        }
        row.diameter = row.by_window.back();
        row.stable = trailing_constant(row.by_window);
        report.proper_on_trace = report.proper_on_trace && row.stable;
        report.rows.push_back(std::move(row));
    }
    return report;
}

Radius check_close(const MapTrace& f, const MapTrace& g) {
    f.validate();
    g.validate();
    std::unordered_map<VertexId, const VertexId*, VertexIdHash> gi;
    for (const auto& [x, y] : g.pairs) gi.emplace(x, &y);
    Radius worst = 0;
    bool any = false;
    for (const auto& [x, y] : f.pairs) {
        auto it = gi.find(x);
        if (it == gi.end()) continue;
        any = true;
        worst = std::max(worst, distance(*f.codomain, y, *it->second));
    }
    if (!any) throw InputError("traces have disjoint coverage");
    return worst;
}

AffineBound estimate_affine_bound(const MapTrace& f) {
    const auto t = tabulate(f);
    const auto n = f.pairs.size();
    Radius diameter = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) diameter = std::max(diameter, t.dx[i][j]);
    }
    AffineBound bound;
    const Radius far = std::max<Radius>(1, (diameter + 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (t.dx[i][j] >= far) {
                bound.a = std::max(bound.a, static_cast<double>(t.dy[i][j]) / static_cast<double>(t.dx[i][j]));
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bound.b = std::max(bound.b, static_cast<double>(t.dy[i][j]) - bound.a * static_cast<double>(t.dx[i][j]));
        }
    }
    return bound;
}

std::size_t affine_violations(const MapTrace& f, const AffineBound& bound) {
    const auto t = tabulate(f);
    const auto n = f.pairs.size();
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (static_cast<double>(t.dy[i][j]) > bound.a * static_cast<double>(t.dx[i][j]) + bound.b) ++bad;
        }
    }
    return bad;
}

double max_ratio(const MapTrace& f) {
    const auto t = tabulate(f);
    const auto n = f.pairs.size();
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (t.dx[i][j] > 0) {
                best = std::max(best, static_cast<double>(t.dy[i][j]) / static_cast<double>(t.dx[i][j]));
            }
        }
    }
    return best;
}

InterpolatedRay geodesic_interpolate(const VertexRay& ray, const SpaceOracle& space,
                                     const std::optional<VertexId>& x0) {
    InterpolatedRay out;
    std::vector<VertexId> path;
    if (x0 && *x0 != ray.root()) {
        path = geodesic(space, *x0, ray.root());
        out.reroot_prefix = static_cast<Radius>(path.size()) - 1;
    } else {
        path.push_back(ray.root());
    }
    const auto& samples = ray.samples();
    out.matched.push_back(static_cast<std::int64_t>(path.size()) - 1);
    for (std::size_t s = 1; s < samples.size(); ++s) {
        const auto& from = samples[s - 1].vertex;
        auto seg = geodesic(space, from, samples[s].vertex);
        out.input_step = std::max(out.input_step, static_cast<Radius>(seg.size()) - 1);
        // Points strictly before the next sample belong to the segment that
        // starts at sample s-1.
        for (std::size_t m = 0; m + 1 < seg.size(); ++m) {
            out.closeness = std::max(out.closeness, distance(space, seg[m], from));
        }
        path.insert(path.end(), seg.begin() + 1, seg.end());
        out.matched.push_back(static_cast<std::int64_t>(path.size()) - 1);
    }
    VertexRay::Extension extend;
    if (ray.at(ray.last_index() + 1)) {
        const auto shift = static_cast<std::int64_t>(path.size()) - 1 - ray.last_index();
        extend = [ray, shift](std::int64_t t) { return *ray.at(t - shift); };
    }
    out.ray = VertexRay(std::move(path), std::move(extend));
    return out;
}

}  // namespace coarse
