#include "coarse/trees.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "coarse/coarsemaps.hpp"
#include "coarse/local_graph.hpp"

namespace coarse {

TreeOracle::TreeOracle(SpacePtr space, Radius check_radius) : space_(std::move(space)) {
    if (!space_) throw InputError("tree oracle needs a space");
    root_ = space_->basepoint();
    const auto radius = std::min(check_radius, space_->horizon());
    LocalGraph g(*space_, root_, radius);
    for (std::size_t v = 1; v < g.size(); ++v) {
        int up = 0;
        for (auto w : g.adjacent(static_cast<std::int32_t>(v))) {
            const auto dw = g.dist(w), dv = g.dist(static_cast<std::int32_t>(v));
            if (dw == dv) throw InputError("cycle through " + space_->format(g.vertex(static_cast<std::int32_t>(v))));
            if (dw < dv) ++up;
        }
        if (up != 1) throw InputError("cycle through " + space_->format(g.vertex(static_cast<std::int32_t>(v))));
    }
}

Radius TreeOracle::depth(const VertexId& v) const {
    const auto d = space_->depth(v);
    if (d > space_->horizon()) throw HorizonError("vertex " + space_->format(v) + " lies outside the horizon");
    return d;
}

std::optional<VertexId> TreeOracle::parent(const VertexId& v) const {
    const auto d = depth(v);
    if (d == 0) return std::nullopt;
    for (auto& w : space_->neighbors(v)) {
        if (space_->depth(w) == d - 1) return w;
    }
    throw InputError("vertex " + space_->format(v) + " has no parent");
}

VertexId TreeOracle::ancestor(const VertexId& v, Radius h) const {
    auto d = depth(v);
    if (h < 0 || h > d) throw InputError("ancestor height out of range");
    VertexId cur = v;
    for (; d > h; --d) cur = *parent(cur);
    return cur;
}

std::vector<VertexId> TreeOracle::root_path(const VertexId& v) const {
    std::vector<VertexId> path{v};
    while (auto p = parent(path.back())) path.push_back(std::move(*p));
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<VertexId> tree_geodesic(const TreeOracle& tree, const VertexId& u, const VertexId& v) {
    std::vector<VertexId> head{u}, tail{v};
    auto du = tree.depth(u), dv = tree.depth(v);
    while (head.back() != tail.back()) {
        if (du >= dv) {
            head.push_back(*tree.parent(head.back()));
            --du;
        } else {
            tail.push_back(*tree.parent(tail.back()));
            --dv;
        }
    }
    head.insert(head.end(), tail.rbegin() + 1, tail.rend());
    return head;
}

VertexId meet(const TreeOracle& tree, const VertexId& u, const VertexId& v) {
    VertexId a = u, b = v;
    auto da = tree.depth(a), db = tree.depth(b);
    while (a != b) {
        if (da >= db) {
            a = *tree.parent(a);
            --da;
        } else {
            b = *tree.parent(b);
            --db;
        }
    }
    return a;
}

std::optional<VertexId> GeodesicRayChain::at(Radius h) const {
    if (h < 0) return std::nullopt;
    if (h <= length()) return vertices[static_cast<std::size_t>(h)];
    if (extend) return extend(h);
    return std::nullopt;
}

VertexRay GeodesicRayChain::ray() const { return VertexRay(vertices, extend); }

namespace {

void require_unit_step(const TreeOracle& tree, const VertexRay& ray) {
    if (!ray.consecutive()) throw InputError("ray must be sampled at consecutive indices; interpolate first");
    if (ray.root() != tree.root()) throw InputError("ray must start at the tree root; reroot first");
    const auto& s = ray.samples();
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (distance(tree.space(), s[i - 1].vertex, s[i].vertex) > 1) {
            throw InputError("ray is not unit-step at index " + std::to_string(i));
        }
    }
}

}  // namespace

ChainExtraction underlying_geodesic_ray(const TreeOracle& tree, const VertexRay& alpha_star) {
    require_unit_step(tree, alpha_star);
    constexpr int kMaxExtensions = 3;
    VertexRay window = alpha_star;
    ChainExtraction out;
    for (int round = 0;; ++round) {
        const auto& s = window.samples();
        Radius deepest = 0;
        for (const auto& x : s) deepest = std::max(deepest, tree.depth(x.vertex));
        std::set<VertexId> boundary;
        for (const auto& x : s) {
            if (tree.depth(x.vertex) == deepest) boundary.insert(x.vertex);
        }
        const bool ends_on_boundary = tree.depth(s.back().vertex) == deepest;
        const bool can_widen = alpha_star.at(window.last_index() + 1).has_value() && round < kMaxExtensions;
        if ((boundary.size() > 1 || !ends_on_boundary) && can_widen) {
            window = alpha_star.extended_to(2 * window.last_index() + 1);
            continue;
        }
        out.extensions = round;
        out.boundary_depth = deepest;
        out.boundary_vertices.assign(boundary.begin(), boundary.end());
        if (!ends_on_boundary) {
            throw InputError("ray does not end at its deepest point on the window; properness evidence fails");
        }
        if (boundary.size() > 1) {
            out.note = std::to_string(boundary.size()) + " chains reach the window boundary";
            return out;
        }
        const auto tip = *boundary.begin();
        GeodesicRayChain chain;
        chain.root = tree.root();
        chain.vertices = tree.root_path(tip);

        std::unordered_set<VertexId, VertexIdHash> image;
        for (const auto& x : s) image.insert(x.vertex);
        out.contained = std::all_of(chain.vertices.begin(), chain.vertices.end(),
                                    [&](const VertexId& v) { return image.count(v) > 0; });
        out.order_convex = true;
        for (std::size_t h = 1; h < chain.vertices.size(); ++h) {
            out.order_convex = out.order_convex && tree.parent(chain.vertices[h]) == chain.vertices[h - 1];
        }
        for (const auto& x : s) {
            if (x.vertex == tip) {
                out.boundary_index = x.index;
                break;
            }
        }
        if (alpha_star.at(window.last_index() + 1)) {
            // Past the window, follow the ray until it reaches height h and
            // read off the ancestor there.
            const auto start = window.last_index();
            const auto base = deepest;
            chain.extend = [tree, alpha_star, start, base](std::int64_t h) {
                const std::int64_t budget = start + 64 * (h - base + 1);
                for (auto t = start; t <= budget; ++t) {
                    auto v = *alpha_star.at(t);
                    if (tree.depth(v) >= h) return tree.ancestor(v, h);
                }
                throw HorizonError("ray does not reach height " + std::to_string(h));
            };
        }
        out.chain = std::move(chain);
        return out;
    }
}

Pi0Verdict pi0_equivalent(const TreeOracle& tree, const VertexRay& alpha, const VertexRay& beta) {
    const auto& space = tree.space();
    const auto a = geodesic_interpolate(alpha, space, tree.root());
    const auto b = geodesic_interpolate(beta, space, tree.root());
    const auto ca = underlying_geodesic_ray(tree, a.ray);
    const auto cb = underlying_geodesic_ray(tree, b.ray);
    Pi0Verdict v;
    if (!ca.chain || !cb.chain) {
        v.note = !ca.chain ? "first ray: " + ca.note : "second ray: " + cb.note;
        return v;
    }
    v.first = ca.chain;
    v.second = cb.chain;
    v.compared_height = std::min(ca.chain->length(), cb.chain->length());
    const auto& x = ca.chain->vertices[static_cast<std::size_t>(v.compared_height)];
    const auto& y = cb.chain->vertices[static_cast<std::size_t>(v.compared_height)];
    if (x == y) {
        v.relation = EndRelation::Same;
    } else {
        v.relation = EndRelation::Different;
        v.divergence_height = tree.depth(meet(tree, x, y));
    }
    return v;
}

HomotopyWitness homotopy_witness(const TreeOracle& tree, const VertexRay& alpha, const WitnessOptions& options) {
    const auto& space = tree.space();
    const auto interp = geodesic_interpolate(alpha, space, tree.root());
    const auto& star = interp.ray;
    const auto extraction = underlying_geodesic_ray(tree, star);
    if (!extraction.chain) throw InputError("no unique underlying geodesic ray: " + extraction.note);
    const auto& chain = *extraction.chain;

    HomotopyWitness w;
    w.reroot_prefix = interp.reroot_prefix;
    Radius step = 0;
    const auto& s = star.samples();
    for (std::size_t i = 1; i < s.size(); ++i) step = std::max(step, distance(space, s[i - 1].vertex, s[i].vertex));
    w.lipschitz = std::max<Radius>(step, 1);
    const auto A = w.lipschitz;

    const auto height = options.height.value_or(star.last_index());
    if (height < 0 || height > star.last_index() || !chain.at(height)) {
        throw HorizonError("witness height " + std::to_string(height) + " exceeds the analysed window");
    }

    std::vector<std::vector<VertexId>> segment(static_cast<std::size_t>(height + 1));
    for (std::int64_t h = 0; h <= height; ++h) {
        segment[static_cast<std::size_t>(h)] = tree_geodesic(tree, *chain.at(h), *star.at(h));
    }
    w.phi = LatticeHomotopy::tabulate(height, [&](std::int64_t i, std::int64_t h) {
        const auto& seg = segment[static_cast<std::size_t>(h)];
        const auto a = static_cast<std::int64_t>(seg.size()) - 1;
        const auto along = a - (A + 1) * i;
        return along >= 0 ? seg[static_cast<std::size_t>(along)] : seg.front();
    });

    std::vector<TargetSpec> targets;
    for (auto rho : options.target_radii) targets.push_back({tree.root(), rho});
    w.certificate = check_lattice_map(space, w.phi, options.radii, targets);
    w.row_bound_ok = std::all_of(w.certificate.bounds.begin(), w.certificate.bounds.end(),
                                 [&](const FamilyBound& b) { return b.same_row <= (A + 1) * b.r; });
    w.column_bound_ok = std::all_of(w.certificate.bounds.begin(), w.certificate.bounds.end(),
                                    [&](const FamilyBound& b) { return b.same_column < 2 * A * b.r; });
    w.passes = w.row_bound_ok && w.certificate.proper_evidence;
    return w;
}

SixPointResult six_point_gap(const TreeOracle& tree, const VertexId& x1, const VertexId& x2, const VertexId& x3,
                             const VertexId& y1, const VertexId& y2, const VertexId& y3, Radius r) {
    const auto& space = tree.space();
    auto d = [&](const VertexId& a, const VertexId& b) { return distance(space, a, b); };
    auto between = [&](const VertexId& a, const VertexId& m, const VertexId& b) { return d(a, m) + d(m, b) == d(a, b); };
    SixPointResult out;
    out.hypothesis[0] = d(x1, y1) < r && d(x3, y3) < r;
    out.hypothesis[1] = between(x1, x2, x3);
    out.hypothesis[2] = between(y1, y2, y3);
    out.hypothesis[3] = y2 == y1 || d(x2, x3) <= d(y2, y3);
    out.hypothesis[4] = x2 == x1 || d(x2, x3) >= d(y2, y3);
    out.hypotheses_hold = std::all_of(out.hypothesis.begin(), out.hypothesis.end(), [](bool b) { return b; });
    out.gap = d(x2, y2);
    return out;
}

SpacePtr random_hairy_tree(std::mt19937_64& rng, const RandomTreeOptions& options) {
    const auto n = options.core_vertices;
    if (n == 0) throw InputError("tree needs at least one vertex");
    if (options.max_degree < 2) throw InputError("max degree must be at least 2");
    std::vector<std::int32_t> parents{-1};
    std::vector<std::size_t> degree(n, 0);
    std::vector<std::int32_t> open{0};
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
        const auto slot = pick(rng);
        const auto p = open[slot];
        parents.push_back(p);
        if (++degree[static_cast<std::size_t>(p)] >= options.max_degree) {
            open[slot] = open.back();
            open.pop_back();
        }
        ++degree[i];
        if (degree[i] < options.max_degree) open.push_back(static_cast<std::int32_t>(i));
    }
    std::vector<Radius> depth(n, 0);
    for (std::size_t i = 1; i < n; ++i) depth[i] = depth[static_cast<std::size_t>(parents[i])] + 1;
    std::shuffle(open.begin(), open.end(), rng);
    const auto sample = std::min(open.size(), std::max<std::size_t>(4 * options.hairs, 8));
    std::stable_sort(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(sample),
                     [&](auto a, auto b) { return depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]; });
    if (open.size() < options.hairs) throw InputError("not enough spare degree for the requested hairs");
    std::vector<std::int32_t> hairs(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(options.hairs));
    return make_hairy_tree(std::move(parents), std::move(hairs));
}

VertexRay hair_ray(const TreeOracle& tree, std::int32_t hair, std::int64_t length) {
    const VertexId first{-1 - hair, 1};
    if (!tree.space().contains(first)) throw InputError("no hair " + std::to_string(hair));
    const auto prefix = tree.root_path(first);
    const auto offset = static_cast<std::int64_t>(prefix.size()) - 1;
    auto at = [hair, offset, prefix](std::int64_t t) {
        if (t <= offset) return prefix[static_cast<std::size_t>(t)];
        return VertexId{-1 - hair, static_cast<std::int32_t>(t - offset + 1)};
    };
    std::vector<VertexId> v;
    for (std::int64_t t = 0; t <= length; ++t) v.push_back(at(t));
    return VertexRay(std::move(v), at);
}

VertexRay detour_ray(const TreeOracle& tree, const VertexRay& spine, std::int64_t length, int max_detour,
                     std::mt19937_64& rng) {
    if (length < 1) throw InputError("detour ray length must be positive");
    if (max_detour < 0) throw InputError("detour length must be non-negative");
    const std::int64_t quiet_tail = max_detour + 1;
    const auto& space = tree.space();
    std::bernoulli_distribution coin(0.5);
    std::vector<VertexId> out;
    for (std::int64_t h = 0; h <= length; ++h) {
        const auto v = *spine.at(h);
        out.push_back(v);
        if (h + quiet_tail > length || max_detour == 0 || !coin(rng)) continue;
        std::uniform_int_distribution<int> len(1, max_detour);
        const auto next = spine.at(h + 1);
        std::vector<VertexId> walk{v};
        for (int k = len(rng); k > 0; --k) {
            std::vector<VertexId> options;
            for (auto& w : space.neighbors(walk.back())) {
                if (walk.size() >= 2 && w == walk[walk.size() - 2]) continue;
                if (walk.size() == 1 && next && w == *next) continue;
                options.push_back(w);
            }
            if (options.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
            walk.push_back(options[pick(rng)]);
        }
        for (std::size_t i = 1; i < walk.size(); ++i) out.push_back(walk[i]);
        for (auto i = static_cast<std::ptrdiff_t>(walk.size()) - 2; i >= 0; --i) out.push_back(walk[static_cast<std::size_t>(i)]);
    }
    const auto last = static_cast<std::int64_t>(out.size()) - 1;
    return VertexRay(std::move(out), [spine, length, last](std::int64_t t) { return *spine.at(length + (t - last)); });
}

}  // namespace coarse
