#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "coarse/space.hpp"

namespace coarse {
namespace {

std::int32_t parse_int(std::string_view s) {
    std::int32_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError("cannot parse integer from '" + std::string(s) + "'");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

nlohmann::json base_params(Radius horizon) {
    nlohmann::json p = nlohmann::json::object();
    if (horizon != kUnboundedHorizon) p["horizon"] = horizon;
    return p;
}

// ---------------------------------------------------------------------------
// Integer lattices: line, half-line, grid-n.

class LatticeSpace final : public SpaceOracle {
public:
    LatticeSpace(SpaceKind kind, int dim, Radius horizon)
        : SpaceOracle(horizon), kind_(kind), dim_(dim) {}

    SpaceKind kind() const override { return kind_; }
    std::string kind_name() const override {
        switch (kind_) {
            case SpaceKind::Line: return "line";
            case SpaceKind::HalfLine: return "halfline";
            default: return "grid-" + std::to_string(dim_);
        }
    }
    VertexId basepoint() const override {
        return VertexId(std::vector<std::int32_t>(static_cast<std::size_t>(dim_), 0));
    }
    std::vector<VertexId> neighbors(const VertexId& v) const override {
        std::vector<VertexId> out;
        out.reserve(2 * static_cast<std::size_t>(dim_));
        for (std::size_t i = 0; i < v.key.size(); ++i) {
            for (int s : {-1, 1}) {
                VertexId w = v;
                w.key[i] += s;
                if (kind_ == SpaceKind::HalfLine && w.key[i] < 0) continue;
                out.push_back(std::move(w));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::size_t degree_bound() const override { return 2 * static_cast<std::size_t>(dim_); }
    bool contains(const VertexId& v) const override {
        if (v.key.size() != static_cast<std::size_t>(dim_)) return false;
        return kind_ != SpaceKind::HalfLine || v.key[0] >= 0;
    }
    std::string format(const VertexId& v) const override {
        std::string s;
        for (std::size_t i = 0; i < v.key.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(v.key[i]);
        }
        return s;
    }
    VertexId parse(std::string_view text) const override {
        VertexId v;
        for (auto part : split(text, ',')) v.key.push_back(parse_int(part));
        if (!contains(v)) throw InputError("not a vertex of " + kind_name() + ": " + std::string(text));
        return v;
    }
    std::optional<Radius> closed_form_distance(const VertexId& u, const VertexId& v) const override {
        Radius d = 0;
        for (std::size_t i = 0; i < u.key.size(); ++i) {
            d += std::abs(static_cast<Radius>(u.key[i]) - v.key[i]);
        }
        return d;
    }
    Radius depth(const VertexId& v) const override {
        return *closed_form_distance(basepoint(), v);
    }
    bool is_tree() const override { return dim_ == 1; }
    nlohmann::json spec() const override {
        return {{"kind", kind_name()}, {"params", base_params(horizon())}};
    }

private:
    SpaceKind kind_;
    int dim_;
};

// ---------------------------------------------------------------------------
// Trees whose vertices are reduced words: the d-regular tree (child-index
// words) and the Cayley graph of the free group of rank k.

Radius common_prefix(const VertexId& u, const VertexId& v) {
    auto [a, b] = std::mismatch(u.key.begin(), u.key.end(), v.key.begin(), v.key.end());
    return static_cast<Radius>(a - u.key.begin());
}

class RegularTree final : public SpaceOracle {
public:
    RegularTree(int degree, Radius horizon) : SpaceOracle(horizon), degree_(degree) {}

    SpaceKind kind() const override { return SpaceKind::RegularTree; }
    std::string kind_name() const override { return "regular-tree-" + std::to_string(degree_); }
    VertexId basepoint() const override { return VertexId{}; }
    std::vector<VertexId> neighbors(const VertexId& v) const override {
        std::vector<VertexId> out;
        if (!v.key.empty()) {
            VertexId parent = v;
            parent.key.pop_back();
            out.push_back(std::move(parent));
        }
        const int children = v.key.empty() ? degree_ : degree_ - 1;
        for (int c = 0; c < children; ++c) {
            VertexId w = v;
            w.key.push_back(c);
            out.push_back(std::move(w));
        }
        return out;
    }
    std::size_t degree_bound() const override { return static_cast<std::size_t>(degree_); }
    bool contains(const VertexId& v) const override {
        for (std::size_t i = 0; i < v.key.size(); ++i) {
            const int limit = i == 0 ? degree_ : degree_ - 1;
            if (v.key[i] < 0 || v.key[i] >= limit) return false;
        }
        return true;
    }
    std::string format(const VertexId& v) const override {
        if (v.key.empty()) return "root";
        std::string s;
        for (std::size_t i = 0; i < v.key.size(); ++i) {
            if (i) s += '.';
            s += std::to_string(v.key[i]);
        }
        return s;
    }
    VertexId parse(std::string_view text) const override {
        VertexId v;
        if (text != "root") {
            for (auto part : split(text, '.')) v.key.push_back(parse_int(part));
        }
        if (!contains(v)) throw InputError("not a vertex of " + kind_name() + ": " + std::string(text));
        return v;
    }
    std::optional<Radius> closed_form_distance(const VertexId& u, const VertexId& v) const override {
        return static_cast<Radius>(u.key.size() + v.key.size()) - 2 * common_prefix(u, v);
    }
    Radius depth(const VertexId& v) const override { return static_cast<Radius>(v.key.size()); }
    bool is_tree() const override { return true; }
    Radius suggested_horizon(Radius r_max) const override { return r_max + 1; }
    nlohmann::json spec() const override {
        return {{"kind", kind_name()}, {"params", base_params(horizon())}};
    }

private:
    int degree_;
};

class FreeGroup final : public SpaceOracle {
public:
    FreeGroup(int rank, Radius horizon) : SpaceOracle(horizon), rank_(rank) {}

    SpaceKind kind() const override { return SpaceKind::FreeGroup; }
    std::string kind_name() const override { return "free-group-rank-" + std::to_string(rank_); }
    VertexId basepoint() const override { return VertexId{}; }
    std::vector<VertexId> neighbors(const VertexId& v) const override {
        std::vector<VertexId> out;
        out.reserve(2 * static_cast<std::size_t>(rank_));
        for (int g = 1; g <= rank_; ++g) {
            for (int letter : {g, -g}) {
                VertexId w = v;
                if (!w.key.empty() && w.key.back() == -letter) {
                    w.key.pop_back();
                } else {
                    w.key.push_back(letter);
                }
                out.push_back(std::move(w));
            }
        }
        return out;
    }
    std::size_t degree_bound() const override { return 2 * static_cast<std::size_t>(rank_); }
    bool contains(const VertexId& v) const override {
        for (std::size_t i = 0; i < v.key.size(); ++i) {
            const auto x = v.key[i];
            if (x == 0 || std::abs(x) > rank_) return false;
            if (i > 0 && v.key[i - 1] == -x) return false;
        }
        return true;
    }
    std::string format(const VertexId& v) const override {
        if (v.key.empty()) return "e";
        std::string s;
        for (auto x : v.key) {
            s += x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1);
        }
        return s;
    }
    VertexId parse(std::string_view text) const override {
        VertexId v;
        if (text != "e") {
            for (char c : text) {
                if (c >= 'a' && c <= 'z') {
                    v.key.push_back(c - 'a' + 1);
                } else if (c >= 'A' && c <= 'Z') {
                    v.key.push_back(-(c - 'A' + 1));
                } else {
                    throw InputError("bad free group letter in '" + std::string(text) + "'");
                }
            }
        }
        if (!contains(v)) throw InputError("not a reduced word of rank " + std::to_string(rank_) + ": " +
                                           std::string(text));
        return v;
    }
    std::optional<Radius> closed_form_distance(const VertexId& u, const VertexId& v) const override {
        return static_cast<Radius>(u.key.size() + v.key.size()) - 2 * common_prefix(u, v);
    }
    Radius depth(const VertexId& v) const override { return static_cast<Radius>(v.key.size()); }
    bool is_tree() const override { return true; }
    Radius suggested_horizon(Radius r_max) const override { return r_max + 1; }
    nlohmann::json spec() const override {
        return {{"kind", kind_name()}, {"params", base_params(horizon())}};
    }

private:
    int rank_;
};

// ---------------------------------------------------------------------------
// Staircase. Keys are (region, height, offset): region 0 = left ray (the root
// is left height 0), 1 = right ray, 2 = interior of step(height) at offset
// 1..len-1 counted from the left ray.

class Staircase final : public SpaceOracle {
public:
    static constexpr std::int32_t kLeft = 0, kRight = 1, kStep = 2;

    Staircase(int n_max, StepRule rule, Radius horizon)
        : SpaceOracle(horizon), n_max_(n_max), rule_(rule) {}

    std::int32_t step_length(std::int32_t n) const {
        return rule_ == StepRule::Squared ? n * n : 1;
    }

    SpaceKind kind() const override { return SpaceKind::Staircase; }
    std::string kind_name() const override { return "staircase"; }
    VertexId basepoint() const override { return {kLeft, 0, 0}; }

    VertexId ray(std::int32_t side, std::int32_t n) const {
        return n == 0 ? basepoint() : VertexId{side, n, 0};
    }
    VertexId step_point(std::int32_t n, std::int32_t offset) const {
        if (offset <= 0) return ray(kLeft, n);
        if (offset >= step_length(n)) return ray(kRight, n);
        return {kStep, n, offset};
    }

    std::vector<VertexId> neighbors(const VertexId& v) const override {
        const auto region = v.key[0], n = v.key[1], off = v.key[2];
        std::vector<VertexId> out;
        if (region == kStep) {
            out.push_back(step_point(n, off - 1));
            out.push_back(step_point(n, off + 1));
        } else if (n == 0) {
            if (n_max_ >= 1) {
                out.push_back(ray(kLeft, 1));
                out.push_back(ray(kRight, 1));
            }
        } else {
            out.push_back(ray(region, n - 1));
            if (n < n_max_) out.push_back(ray(region, n + 1));
            out.push_back(step_point(n, region == kLeft ? 1 : step_length(n) - 1));
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::size_t degree_bound() const override { return 3; }
    bool contains(const VertexId& v) const override {
        if (v.key.size() != 3) return false;
        const auto region = v.key[0], n = v.key[1], off = v.key[2];
        if (n < 0 || n > n_max_) return false;
        if (region == kLeft) return off == 0;
        if (region == kRight) return off == 0 && n >= 1;
        if (region == kStep) return n >= 1 && off > 0 && off < step_length(n);
        return false;
    }
    std::string format(const VertexId& v) const override {
        const auto region = v.key[0], n = v.key[1];
        if (region == kLeft) return "L" + std::to_string(n);
        if (region == kRight) return "R" + std::to_string(n);
        return "S" + std::to_string(n) + ":" + std::to_string(v.key[2]);
    }
    VertexId parse(std::string_view text) const override {
        if (text.empty()) throw InputError("empty staircase address");
        VertexId v;
        const char tag = text[0];
        auto rest = text.substr(1);
        if (tag == 'L' || tag == 'R') {
            v = ray(tag == 'L' ? kLeft : kRight, parse_int(rest));
        } else if (tag == 'S') {
            auto parts = split(rest, ':');
            if (parts.size() != 2) throw InputError("bad step address '" + std::string(text) + "'");
            v = {kStep, parse_int(parts[0]), parse_int(parts[1])};
        } else {
            throw InputError("bad staircase address '" + std::string(text) + "'");
        }
        if (!contains(v)) throw InputError("not a staircase vertex: " + std::string(text));
        return v;
    }
    Radius depth(const VertexId& v) const override {
        if (v.key[0] != kStep) return v.key[1];
        const Radius len = step_length(v.key[1]);
        return v.key[1] + std::min<Radius>(v.key[2], len - v.key[2]);
    }
    Radius suggested_horizon(Radius r_max) const override {
        if (rule_ == StepRule::Constant) return 3 * r_max;
        // Every step above r_max must fit inside the window whole, otherwise
        // the two ray tails look disconnected at that radius.
        const Radius n = r_max + 1;
        return n + (n * n) / 2 + 1;
    }
    nlohmann::json spec() const override {
        auto p = base_params(horizon());
        p["n_max"] = n_max_;
        p["step_rule"] = rule_ == StepRule::Squared ? "squared" : "constant";
        return {{"kind", kind_name()}, {"params", p}};
    }

private:
    int n_max_;
    StepRule rule_;
};

// ---------------------------------------------------------------------------
// Finite graphs with string vertex names.

class FiniteGraph final : public SpaceOracle {
public:
    FiniteGraph(std::vector<std::string> names, std::vector<std::vector<std::int32_t>> adjacency,
                std::int32_t base, Radius horizon, nlohmann::json spec, std::optional<std::size_t> max_degree)
        : SpaceOracle(horizon),
          names_(std::move(names)),
          adj_(std::move(adjacency)),
          base_(base),
          spec_(std::move(spec)) {
        for (std::size_t i = 0; i < names_.size(); ++i) lookup_.emplace(names_[i], static_cast<std::int32_t>(i));
        degree_ = 0;
        for (const auto& a : adj_) degree_ = std::max(degree_, a.size());
        if (max_degree && degree_ > *max_degree) {
            throw InputError("vertex degree " + std::to_string(degree_) + " exceeds declared bound " +
                             std::to_string(*max_degree));
        }
        // Depths from the basepoint, computed once.
        depth_.assign(names_.size(), -1);
        std::vector<std::int32_t> queue{base_};
        depth_[static_cast<std::size_t>(base_)] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const auto v = queue[h];
            for (auto w : adj_[static_cast<std::size_t>(v)]) {
                if (depth_[static_cast<std::size_t>(w)] < 0) {
                    depth_[static_cast<std::size_t>(w)] = depth_[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(w);
                }
            }
        }
        acyclic_ = true;
        std::size_t edges = 0;
        for (const auto& a : adj_) edges += a.size();
        edges /= 2;
        acyclic_ = queue.size() == names_.size() && edges + 1 == names_.size();
    }

    SpaceKind kind() const override { return SpaceKind::Finite; }
    std::string kind_name() const override { return "finite"; }
    VertexId basepoint() const override { return {base_}; }
    std::vector<VertexId> neighbors(const VertexId& v) const override {
        std::vector<VertexId> out;
        for (auto w : adj_[static_cast<std::size_t>(v.key[0])]) out.push_back({w});
        return out;
    }
    std::size_t degree_bound() const override { return degree_; }
    bool contains(const VertexId& v) const override {
        return v.key.size() == 1 && v.key[0] >= 0 && static_cast<std::size_t>(v.key[0]) < names_.size();
    }
    std::string format(const VertexId& v) const override { return names_[static_cast<std::size_t>(v.key[0])]; }
    VertexId parse(std::string_view text) const override {
        auto it = lookup_.find(std::string(text));
        if (it == lookup_.end()) throw InputError("unknown vertex '" + std::string(text) + "'");
        return {it->second};
    }
    Radius depth(const VertexId& v) const override {
        const auto d = depth_[static_cast<std::size_t>(v.key[0])];
        if (d < 0) throw HorizonError("vertex " + format(v) + " is not connected to the basepoint");
        return d;
    }
    bool is_tree() const override { return acyclic_; }
    Radius suggested_horizon(Radius r_max) const override {
        Radius ecc = 0;
        for (auto d : depth_) ecc = std::max(ecc, d);
        return std::max(r_max + 1, ecc);
    }
    nlohmann::json spec() const override { return spec_; }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::int32_t>> adj_;
    std::int32_t base_;
    nlohmann::json spec_;
    std::unordered_map<std::string, std::int32_t> lookup_;
    std::vector<Radius> depth_;
    std::size_t degree_ = 0;
    bool acyclic_ = false;
};

// Finite rooted core (parent array, parents[i] < i) with infinite paths
// ("hairs") attached at chosen core vertices. Core vertex i has key {i};
// point s >= 1 of hair j has key {-1 - j, s}.
class HairyTree final : public SpaceOracle {
public:
    HairyTree(std::vector<std::int32_t> parents, std::vector<std::int32_t> hairs, Radius horizon)
        : SpaceOracle(horizon), parent_(std::move(parents)), hair_base_(std::move(hairs)) {
        const auto n = parent_.size();
        if (n == 0 || parent_[0] != -1) throw InputError("hairy tree: parents[0] must be -1");
        children_.resize(n);
        depth_.assign(n, 0);
        for (std::size_t i = 1; i < n; ++i) {
            const auto p = parent_[i];
            if (p < 0 || static_cast<std::size_t>(p) >= i) throw InputError("hairy tree: parents[i] must lie in [0, i)");
            children_[static_cast<std::size_t>(p)].push_back(static_cast<std::int32_t>(i));
            depth_[i] = depth_[static_cast<std::size_t>(p)] + 1;
        }
        hairs_at_.resize(n);
        for (std::size_t j = 0; j < hair_base_.size(); ++j) {
            const auto b = hair_base_[j];
            if (b < 0 || static_cast<std::size_t>(b) >= n) throw InputError("hairy tree: hair base out of range");
            hairs_at_[static_cast<std::size_t>(b)].push_back(static_cast<std::int32_t>(j));
        }
        for (std::size_t i = 0; i < n; ++i) {
            degree_ = std::max(degree_, children_[i].size() + hairs_at_[i].size() + (i > 0 ? 1 : 0));
        }
        if (!hair_base_.empty()) degree_ = std::max<std::size_t>(degree_, 2);
    }

    SpaceKind kind() const override { return SpaceKind::HairyTree; }
    std::string kind_name() const override { return "hairy-tree"; }
    VertexId basepoint() const override { return {0}; }
    std::vector<VertexId> neighbors(const VertexId& v) const override {
        std::vector<VertexId> out;
        if (v.key[0] >= 0) {
            const auto i = static_cast<std::size_t>(v.key[0]);
            if (i > 0) out.push_back({parent_[i]});
            for (auto c : children_[i]) out.push_back({c});
            for (auto j : hairs_at_[i]) out.push_back({-1 - j, 1});
        } else {
            const auto j = -1 - v.key[0];
            const auto s = v.key[1];
            if (s == 1) {
                out.push_back({hair_base_[static_cast<std::size_t>(j)]});
            } else {
                out.push_back({v.key[0], s - 1});
            }
            out.push_back({v.key[0], s + 1});
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::size_t degree_bound() const override { return degree_; }
    bool contains(const VertexId& v) const override {
        if (v.key.size() == 1) return v.key[0] >= 0 && static_cast<std::size_t>(v.key[0]) < parent_.size();
        return v.key.size() == 2 && v.key[0] < 0 && static_cast<std::size_t>(-1 - v.key[0]) < hair_base_.size() &&
               v.key[1] >= 1;
    }
    std::string format(const VertexId& v) const override {
        if (v.key[0] >= 0) return "v" + std::to_string(v.key[0]);
        return "h" + std::to_string(-1 - v.key[0]) + "." + std::to_string(v.key[1]);
    }
    VertexId parse(std::string_view text) const override {
        VertexId v;
        if (!text.empty() && text[0] == 'v') {
            v = {parse_int(text.substr(1))};
        } else if (!text.empty() && text[0] == 'h') {
            auto parts = split(text.substr(1), '.');
            if (parts.size() != 2) throw InputError("cannot parse hairy-tree vertex '" + std::string(text) + "'");
            v = {-1 - parse_int(parts[0]), parse_int(parts[1])};
        } else {
            throw InputError("cannot parse hairy-tree vertex '" + std::string(text) + "'");
        }
        if (!contains(v)) throw InputError("no such vertex '" + std::string(text) + "'");
        return v;
    }
    std::optional<Radius> closed_form_distance(const VertexId& u, const VertexId& v) const override {
        if (u.key[0] < 0 && u.key[0] == v.key[0]) return std::abs(u.key[1] - v.key[1]);
        auto [a, ea] = anchor(u);
        auto [b, eb] = anchor(v);
        Radius d = ea + eb;
        while (a != b) {
            if (depth_[static_cast<std::size_t>(a)] < depth_[static_cast<std::size_t>(b)]) std::swap(a, b);
            a = parent_[static_cast<std::size_t>(a)];
            ++d;
        }
        return d;
    }
    Radius depth(const VertexId& v) const override {
        auto [a, e] = anchor(v);
        return depth_[static_cast<std::size_t>(a)] + e;
    }
    bool is_tree() const override { return true; }
    Radius suggested_horizon(Radius r_max) const override {
        Radius ecc = 0;
        for (auto d : depth_) ecc = std::max(ecc, d);
        return std::max(r_max + 1, ecc + 1);
    }
    nlohmann::json spec() const override {
        auto p = base_params(horizon());
        p["parents"] = parent_;
        p["hairs"] = hair_base_;
        return {{"kind", kind_name()}, {"params", p}};
    }

private:
    std::pair<std::int32_t, Radius> anchor(const VertexId& v) const {
        if (v.key[0] >= 0) return {v.key[0], 0};
        return {hair_base_[static_cast<std::size_t>(-1 - v.key[0])], v.key[1]};
    }

    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> hair_base_;
    std::vector<std::vector<std::int32_t>> children_;
    std::vector<std::vector<std::int32_t>> hairs_at_;
    std::vector<Radius> depth_;
    std::size_t degree_ = 1;
};

SpacePtr finite_from_sets(std::vector<std::string> names, const std::vector<std::set<std::int32_t>>& sets,
                          const EdgeListOptions& options, nlohmann::json spec) {
    if (names.empty()) throw InputError("finite graph has no vertices");
    std::int32_t base = 0;
    if (options.basepoint) {
        auto it = std::find(names.begin(), names.end(), *options.basepoint);
        if (it == names.end()) throw InputError("basepoint '" + *options.basepoint + "' not in graph");
        base = static_cast<std::int32_t>(it - names.begin());
    }
    std::vector<std::vector<std::int32_t>> adj;
    adj.reserve(sets.size());
    for (const auto& s : sets) adj.emplace_back(s.begin(), s.end());
    return std::make_shared<FiniteGraph>(std::move(names), std::move(adj), base, options.horizon,
                                         std::move(spec), options.max_degree);
}

}  // namespace

SpacePtr make_line(Radius horizon) {
    return std::make_shared<LatticeSpace>(SpaceKind::Line, 1, horizon);
}
SpacePtr make_halfline(Radius horizon) {
    return std::make_shared<LatticeSpace>(SpaceKind::HalfLine, 1, horizon);
}
SpacePtr make_grid(int dimension, Radius horizon) {
    if (dimension < 1) throw InputError("grid dimension must be >= 1");
    return std::make_shared<LatticeSpace>(SpaceKind::Grid, dimension, horizon);
}
SpacePtr make_regular_tree(int degree, Radius horizon) {
    if (degree < 2) throw InputError("regular tree degree must be >= 2");
    return std::make_shared<RegularTree>(degree, horizon);
}
SpacePtr make_free_group(int rank, Radius horizon) {
    if (rank < 1 || rank > 26) throw InputError("free group rank must be in 1..26");
    return std::make_shared<FreeGroup>(rank, horizon);
}
SpacePtr make_hairy_tree(std::vector<std::int32_t> parents, std::vector<std::int32_t> hairs, Radius horizon) {
    return std::make_shared<HairyTree>(std::move(parents), std::move(hairs), horizon);
}
SpacePtr make_staircase(int n_max, StepRule rule, Radius horizon) {
    if (n_max < 1) throw InputError("staircase n_max must be >= 1");
    if (rule == StepRule::Squared && n_max > 40000) throw InputError("staircase n_max too large");
    return std::make_shared<Staircase>(n_max, rule, horizon);
}

namespace {

SpacePtr finite_from_edges(const std::vector<std::pair<std::string, std::string>>& edges,
                           const EdgeListOptions& options, std::optional<nlohmann::json> spec) {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::int32_t> ids;
    std::vector<std::set<std::int32_t>> sets;
    auto id_of = [&](const std::string& s) {
        auto [it, inserted] = ids.emplace(s, static_cast<std::int32_t>(names.size()));
        if (inserted) {
            names.push_back(s);
            sets.emplace_back();
        }
        return it->second;
    };
    nlohmann::json edge_json = nlohmann::json::array();
    for (const auto& [a, b] : edges) {
        const auto u = id_of(a), v = id_of(b);
        edge_json.push_back({a, b});
        if (u == v) continue;
        sets[static_cast<std::size_t>(u)].insert(v);
        sets[static_cast<std::size_t>(v)].insert(u);
    }
    nlohmann::json params = base_params(options.horizon);
    params["edges"] = edge_json;
    if (options.basepoint) params["basepoint"] = *options.basepoint;
    if (!spec) spec = nlohmann::json{{"kind", "finite"}, {"params", params}};
    return finite_from_sets(std::move(names), sets, options, std::move(*spec));
}

}  // namespace

SpacePtr make_finite(const std::vector<std::pair<std::string, std::string>>& edges,
                     const EdgeListOptions& options) {
    return finite_from_edges(edges, options, std::nullopt);
}

SpacePtr make_finite_adjacency(const std::vector<std::pair<std::string, std::vector<std::string>>>& adjacency,
                               const EdgeListOptions& options) {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::int32_t> ids;
    for (const auto& [v, _] : adjacency) {
        if (!ids.emplace(v, static_cast<std::int32_t>(names.size())).second) {
            throw InputError("vertex '" + v + "' listed twice");
        }
        names.push_back(v);
    }
    std::vector<std::set<std::int32_t>> sets(names.size());
    for (const auto& [v, nbrs] : adjacency) {
        const auto u = ids.at(v);
        for (const auto& w : nbrs) {
            auto it = ids.find(w);
            if (it == ids.end()) throw InputError("neighbour '" + w + "' of '" + v + "' is not listed");
            if (it->second != u) sets[static_cast<std::size_t>(u)].insert(it->second);
        }
    }
    for (std::size_t u = 0; u < sets.size(); ++u) {
        for (auto w : sets[u]) {
            if (!sets[static_cast<std::size_t>(w)].count(static_cast<std::int32_t>(u))) {
                throw InputError("adjacency is not symmetric: " + names[u] + " -> " +
                                 names[static_cast<std::size_t>(w)]);
            }
        }
    }
    nlohmann::json adj_json = nlohmann::json::object();
    for (const auto& [v, nbrs] : adjacency) adj_json[v] = nbrs;
    nlohmann::json params = base_params(options.horizon);
    params["adjacency"] = adj_json;
    if (options.basepoint) params["basepoint"] = *options.basepoint;
    return finite_from_sets(std::move(names), sets, options, {{"kind", "finite"}, {"params", params}});
}

SpacePtr load_edge_list(const std::string& path, const EdgeListOptions& options) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open edge list '" + path + "'");
    std::vector<std::pair<std::string, std::string>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (!(ls >> b) || (ls >> extra)) {
            throw InputError(path + ":" + std::to_string(lineno) + ": expected two vertex names");
        }
        edges.emplace_back(a, b);
    }
    nlohmann::json params = base_params(options.horizon);
    if (options.basepoint) params["basepoint"] = *options.basepoint;
    return finite_from_edges(edges, options,
                             nlohmann::json{{"kind", "finite-file"}, {"path", path}, {"params", params}});
}

}  // namespace coarse
