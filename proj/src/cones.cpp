#include "coarse/cones.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "coarse/local_graph.hpp"

namespace coarse {
namespace {

// Signed base-10 integer; cpp_int's string constructor would treat "012" as octal.
boost::multiprecision::cpp_int decimal_int(std::string text) {
    const bool negative = !text.empty() && text[0] == '-';
    if (negative || (!text.empty() && text[0] == '+')) text.erase(0, 1);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw std::runtime_error("bad integer");
    }
    text.erase(0, std::min(text.find_first_not_of('0'), text.size() - 1));
    boost::multiprecision::cpp_int value(text);
    return negative ? boost::multiprecision::cpp_int(-value) : value;
}

Rational parse_rational(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    std::string text = j.is_string() ? j.get<std::string>() : j.dump();
    if (text.empty()) throw InputError("empty coordinate");
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            Rational num(decimal_int(text.substr(0, slash)));
            const auto den = decimal_int(text.substr(slash + 1));
            if (den == 0) throw InputError("zero denominator in '" + text + "'");
            return num / Rational(den);
        }
        bool negative = text[0] == '-';
        if (negative || text[0] == '+') text.erase(0, 1);
        auto dot = text.find('.');
        std::string whole = text.substr(0, dot);
        std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
        if (whole.empty()) whole = "0";
        if (text.find_first_not_of("0123456789.") != std::string::npos) throw std::runtime_error("bad digits");
        boost::multiprecision::cpp_int scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const auto digits = decimal_int(whole + frac);
        Rational value = Rational(digits) / Rational(scale);
        return negative ? Rational(-value) : value;
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("cannot parse coordinate '" + text + "'");
    }
}

Rational norm_squared(const std::vector<Rational>& x) {
    Rational s = 0;
    for (const auto& c : x) s += c * c;
    return s;
}

std::string rational_text(const Rational& r) {
    auto n = boost::multiprecision::numerator(r);
    auto d = boost::multiprecision::denominator(r);
    return d == 1 ? n.str() : n.str() + "/" + d.str();
}

}  // namespace

void FiniteComplex::validate() const {
    if (dimension < 1) throw InputError("complex dimension must be positive");
    if (vertices.empty()) throw InputError("complex has no vertices");
    for (const auto& v : vertices) {
        if (v.size() != dimension) throw InputError("vertex coordinate count differs from the dimension");
    }
    for (const auto& [a, b] : edges) {
        if (a >= vertices.size() || b >= vertices.size()) throw InputError("simplex references a missing vertex");
    }
}

FiniteComplex FiniteComplex::from_json(const nlohmann::json& doc) {
    FiniteComplex x;
    x.dimension = doc.value("dimension", std::size_t{1});
    for (const auto& v : doc.at("vertices")) {
        std::vector<Rational> coords;
        if (v.is_array()) {
            for (const auto& c : v) coords.push_back(parse_rational(c));
        } else {
            coords.push_back(parse_rational(v));
        }
        x.vertices.push_back(std::move(coords));
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& s : doc.value("simplices", nlohmann::json::array())) {
        std::vector<std::size_t> ids = s.get<std::vector<std::size_t>>();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                auto e = std::minmax(ids[i], ids[j]);
                if (e.first != e.second && seen.insert(e).second) x.edges.push_back(e);
            }
        }
        for (auto id : ids) {
            if (id >= x.vertices.size()) throw InputError("simplex references a missing vertex");
        }
    }
    x.validate();
    return x;
}

nlohmann::json FiniteComplex::to_json() const {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : vertices) {
        nlohmann::json c = nlohmann::json::array();
        for (const auto& r : v) c.push_back(rational_text(r));
        verts.push_back(c);
    }
    nlohmann::json simplices = nlohmann::json::array();
    for (const auto& [a, b] : edges) simplices.push_back({a, b});
    return {{"dimension", dimension}, {"vertices", verts}, {"simplices", simplices}};
}

std::vector<std::vector<std::size_t>> complex_components(const FiniteComplex& x) {
    x.validate();
    UnionFind uf(x.vertices.size());
    for (const auto& [a, b] : x.edges) uf.unite(a, b);
    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t v = 0; v < x.vertices.size(); ++v) by_root[uf.find(v)].push_back(v);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [_, members] : by_root) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

Rational cone_distance_squared(const ConePoint& p, const ConePoint& q) {
    if (p.base.size() != q.base.size()) throw InputError("cone points have different dimensions");
    Rational s = (p.height - q.height) * (p.height - q.height);
    for (std::size_t i = 0; i < p.base.size(); ++i) {
        const Rational d = p.height * p.base[i] - q.height * q.base[i];
        s += d * d;
    }
    return s;
}

double cone_distance(const ConePoint& p, const ConePoint& q) {
    return std::sqrt(static_cast<double>(cone_distance_squared(p, q)));
}

ConePoint point_ray(const std::vector<Rational>& x, const Rational& r, std::int64_t h) {
    const Rational height(h);
    return {x, height < r ? r : height};
}

ConeMesh cone_mesh(const FiniteComplex& x, std::int64_t layers, double mesh) {
    x.validate();
    if (layers < 1) throw InputError("cone mesh needs at least one layer");
    if (!(mesh > 0)) throw InputError("mesh density must be positive");

    struct Point {
        std::string name;
        ConePoint exact;
        std::vector<double> coords;  // (h x, h)
    };
    auto make_point = [&](std::string name, std::vector<Rational> base, std::int64_t h) {
        Point p{std::move(name), {std::move(base), Rational(h)}, {}};
        for (const auto& c : p.exact.base) p.coords.push_back(static_cast<double>(c) * static_cast<double>(h));
        p.coords.push_back(static_cast<double>(h));
        return p;
    };

    ConeMesh out;
    out.layers = layers;
    Rational widest = 0;
    for (const auto& v : x.vertices) widest = std::max(widest, norm_squared(v));
    out.link_squared = 1 + widest;
    const double link2 = static_cast<double>(out.link_squared);

    std::vector<std::vector<Point>> layer(static_cast<std::size_t>(layers + 1));
    layer[0].push_back(make_point("apex", std::vector<Rational>(x.dimension, Rational(0)), 0));
    for (std::int64_t h = 1; h <= layers; ++h) {
        auto& pts = layer[static_cast<std::size_t>(h)];
        const std::string tag = "h" + std::to_string(h) + ":";
        for (std::size_t i = 0; i < x.vertices.size(); ++i) pts.push_back(make_point(tag + "v" + std::to_string(i), x.vertices[i], h));
        for (std::size_t e = 0; e < x.edges.size(); ++e) {
            const auto& a = x.vertices[x.edges[e].first];
            const auto& b = x.vertices[x.edges[e].second];
            std::vector<Rational> delta(x.dimension);
            for (std::size_t i = 0; i < x.dimension; ++i) delta[i] = b[i] - a[i];
            const Rational len2 = norm_squared(delta);
            const auto n = std::max<std::int64_t>(
                1, static_cast<std::int64_t>(std::ceil(mesh * static_cast<double>(h) * std::sqrt(static_cast<double>(len2)))));
            if (Rational(h * h) * len2 > out.link_squared * Rational(n * n)) {
                out.coarse_layers.push_back("layer " + std::to_string(h) + " edge " + std::to_string(e));
            }
            for (std::int64_t k = 1; k < n; ++k) {
                std::vector<Rational> base(x.dimension);
                for (std::size_t i = 0; i < x.dimension; ++i) base[i] = a[i] + delta[i] * Rational(k, n);
                pts.push_back(make_point(tag + "e" + std::to_string(e) + ":" + std::to_string(k), std::move(base), h));
            }
        }
    }

    std::vector<std::pair<std::string, std::string>> edges;
    auto link = [&](const Point& p, const Point& q) {
        double d2 = 0;
        for (std::size_t i = 0; i < p.coords.size(); ++i) d2 += (p.coords[i] - q.coords[i]) * (p.coords[i] - q.coords[i]);
        const double slack = 1e-9 * (1 + link2);
        if (d2 > link2 + slack) return;
        if (d2 < link2 - slack || cone_distance_squared(p.exact, q.exact) <= out.link_squared) {
            edges.emplace_back(p.name, q.name);
        }
    };
    for (std::size_t h = 0; h < layer.size(); ++h) {
        const auto& here = layer[h];
        for (std::size_t i = 0; i < here.size(); ++i) {
            for (std::size_t j = i + 1; j < here.size(); ++j) link(here[i], here[j]);
            if (h + 1 < layer.size()) {
                for (const auto& q : layer[h + 1]) link(here[i], q);
            }
        }
        out.points += here.size();
    }
    EdgeListOptions options;
    options.basepoint = "apex";
    out.graph = make_finite(edges, options);
    return out;
}

ConeReport verify_cone_bijection(const FiniteComplex& x, Radius r_max, Radius horizon, double mesh) {
    ConeReport report;
    const auto comps = complex_components(x);
    report.components = comps.size();
    const auto m = cone_mesh(x, horizon, mesh);
    report.mesh_points = m.points;
    report.mesh_ok = m.coarse_layers.empty();
    if (!report.mesh_ok) {
        report.note = "mesh too coarse: " + m.coarse_layers.front();
        return report;
    }
    const auto profile = ends_profile(*m.graph, m.graph->basepoint(), r_max, horizon);
    report.counts = profile.counts();
    report.ends = stabilized_end_count(profile);

    // Top of the point ray over each component's least vertex.
    const auto outside = components_outside(*m.graph, m.graph->basepoint(), r_max, horizon);
    std::set<std::size_t> hit;
    bool all_unbounded = true;
    for (const auto& c : comps) {
        const auto top = m.graph->parse("h" + std::to_string(horizon) + ":v" + std::to_string(c.front()));
        for (std::size_t i = 0; i < outside.size(); ++i) {
            if (std::binary_search(outside[i].vertices.begin(), outside[i].vertices.end(), top)) {
                hit.insert(i);
                all_unbounded = all_unbounded && outside[i].unbounded;
            }
        }
    }
    report.rays_separated = all_unbounded && hit.size() == comps.size();
    report.passes = report.ends.stabilized && *report.ends.stabilized == report.components && report.rays_separated;
    if (!report.ends.stabilized) report.note = "ends count did not stabilize";
    return report;
}

}  // namespace coarse
