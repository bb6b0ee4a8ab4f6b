#include "coarse/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace coarse {
namespace {

constexpr std::int32_t kLeft = 0, kRight = 1, kStep = 2;

bool squared_steps(const SpaceOracle& staircase) {
    if (staircase.kind() != SpaceKind::Staircase) throw InputError("expected a staircase, got " + staircase.kind_name());
    return staircase.spec()["params"].value("step_rule", std::string("squared")) == "squared";
}

std::int32_t step_length(bool squared, std::int32_t n) { return squared ? n * n : 1; }

VertexId step_point(bool squared, std::int32_t n, std::int32_t o) {
    if (o <= 0) return staircase_left(n);
    if (o >= step_length(squared, n)) return staircase_right(n);
    return {kStep, n, o};
}

std::int32_t offset_in_step(bool squared, const VertexId& v) {
    if (v.key[0] == kLeft) return 0;
    if (v.key[0] == kRight) return step_length(squared, v.key[1]);
    return v.key[2];
}

// A unit-step walk with marked corner indices.
struct Walk {
    std::vector<VertexId> v;
    std::vector<std::size_t> corners;

    void push(const VertexId& x) {
        if (v.empty() || v.back() != x) v.push_back(x);
    }
    void corner() { corners.push_back(v.size() - 1); }
    void ray(std::int32_t side, std::int32_t from, std::int32_t to) {
        const int dir = to >= from ? 1 : -1;
        for (auto n = from;; n += dir) {
            push(side == kLeft ? staircase_left(n) : staircase_right(n));
            if (n == to) break;
        }
        corner();
    }
    void step(bool squared, std::int32_t n, std::int32_t from, std::int32_t to) {
        const int dir = to >= from ? 1 : -1;
        for (auto o = from;; o += dir) {
            push(step_point(squared, n, o));
            if (o == to) break;
        }
        corner();
    }
};

// Lattice samples k_0 = 0 <= ... <= k_h = |walk| - 1 that land on every corner.
// The first `linger` lattice steps stay at the walk's start.
std::vector<VertexId> sample_walk(const Walk& w, std::int64_t h, std::int64_t linger) {
    std::vector<std::size_t> cuts{0};
    for (auto c : w.corners) {
        if (c > cuts.back()) cuts.push_back(c);
    }
    if (cuts.back() != w.v.size() - 1) cuts.push_back(w.v.size() - 1);
    const auto segments = static_cast<std::int64_t>(cuts.size()) - 1;
    const auto budget = h - linger;
    std::vector<VertexId> row;
    row.reserve(static_cast<std::size_t>(h + 1));
    for (std::int64_t i = 0; i < linger; ++i) row.push_back(w.v.front());
    if (segments == 0) {
        while (static_cast<std::int64_t>(row.size()) < h + 1) row.push_back(w.v.front());
        return row;
    }
    if (budget < segments) {
        // Too few lattice steps to pin every corner; sample uniformly.
        return sample_walk(Walk{w.v, {}}, h, linger);
    }
    const auto total = static_cast<double>(w.v.size() - 1);
    // Largest-remainder allocation with at least one lattice step per segment.
    std::vector<std::int64_t> steps(static_cast<std::size_t>(segments), 1);
    std::vector<std::pair<double, std::size_t>> rem;
    std::int64_t used = segments;
    for (std::size_t s = 0; s < steps.size(); ++s) {
        const double share = static_cast<double>(budget - segments) * static_cast<double>(cuts[s + 1] - cuts[s]) / total;
        steps[s] += static_cast<std::int64_t>(std::floor(share));
        used += static_cast<std::int64_t>(std::floor(share));
        rem.emplace_back(share - std::floor(share), s);
    }
    std::sort(rem.begin(), rem.end(), [](auto a, auto b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
    for (std::size_t k = 0; used < budget; ++k, ++used) ++steps[rem[k % rem.size()].second];
    row.push_back(w.v.front());
    for (std::size_t s = 0; s < steps.size(); ++s) {
        const auto len = static_cast<std::int64_t>(cuts[s + 1] - cuts[s]);
        for (std::int64_t t = 1; t <= steps[s]; ++t) {
            const auto k = cuts[s] + static_cast<std::size_t>(std::llround(static_cast<double>(t * len) / static_cast<double>(steps[s])));
            row.push_back(w.v[k]);
        }
    }
    return row;
}

bool same_word(const std::vector<Letter>& a, const std::vector<Letter>& b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](const Letter& x, const Letter& y) {
               return x.same_letter(y);
           });
}

}  // namespace

StaircaseAddress staircase_address(const VertexId& v) {
    StaircaseAddress a;
    a.region = v.key[0] == kLeft    ? StaircaseAddress::Region::LeftRay
               : v.key[0] == kRight ? StaircaseAddress::Region::RightRay
                                    : StaircaseAddress::Region::StepInterior;
    a.height = v.key[1];
    a.offset = v.key[2];
    return a;
}

VertexId staircase_left(std::int32_t n) { return {kLeft, n, 0}; }
VertexId staircase_right(std::int32_t n) { return n == 0 ? VertexId{kLeft, 0, 0} : VertexId{kRight, n, 0}; }

VertexId staircase_step_point(const SpaceOracle& staircase, std::int32_t n, std::int32_t offset) {
    return step_point(squared_steps(staircase), n, offset);
}

std::int32_t staircase_step_length(const SpaceOracle& staircase, std::int32_t n) {
    return step_length(squared_steps(staircase), n);
}

std::int32_t step_of(const VertexId& v) { return v.key[1]; }

VertexRay staircase_alpha(std::int64_t length) {
    auto at = [](std::int64_t t) { return staircase_left(static_cast<std::int32_t>(t)); };
    std::vector<VertexId> v;
    for (std::int64_t t = 0; t <= length; ++t) v.push_back(at(t));
    return VertexRay(std::move(v), at);
}

VertexRay staircase_alpha_prime(std::int64_t length) {
    auto at = [](std::int64_t t) { return staircase_right(static_cast<std::int32_t>(t)); };
    std::vector<VertexId> v;
    for (std::int64_t t = 0; t <= length; ++t) v.push_back(at(t));
    return VertexRay(std::move(v), at);
}

std::string word_to_string(const std::vector<Letter>& w) {
    if (w.empty()) return "e";
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += (l.forward ? 'f' : 'b') + std::to_string(l.step);
    }
    return out;
}

std::vector<Letter> parse_word(const std::string& text) {
    std::vector<Letter> w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "e") continue;
        if (tok.size() < 2 || (tok[0] != 'f' && tok[0] != 'b')) throw InputError("bad letter '" + tok + "'");
        Letter l;
        l.forward = tok[0] == 'f';
        try {
            l.step = std::stoi(tok.substr(1));
        } catch (const std::exception&) {
            throw InputError("bad letter '" + tok + "'");
        }
        if (l.step < 1) throw InputError("bad letter '" + tok + "'");
        w.push_back(l);
    }
    return w;
}

StepZones::StepZones(const SpaceOracle& staircase, Radius a)
    : space_(staircase), a_(a), squared_(squared_steps(staircase)) {
    if (a < 1) throw InputError("A must be positive");
}

const StepZones::Balls& StepZones::balls(std::int32_t j) const {
    auto it = cache_.find(j);
    if (it != cache_.end()) return it->second;
    const bool sq = squared_;
    Balls b;
    auto collect = [&](const VertexId& center, std::vector<std::int32_t>& out) {
        for (const auto& v : ball(space_, center, a_ - 1)) {
            if (step_of(v) == j && !(v.key[0] == kLeft && j == 0)) out.push_back(offset_in_step(sq, v));
        }
        std::sort(out.begin(), out.end());
    };
    collect(staircase_left(j), b.left);
    collect(staircase_right(j), b.right);
    for (auto o : b.left) {
        if (std::binary_search(b.right.begin(), b.right.end(), o)) b.overlap = true;
    }
    return cache_.emplace(j, std::move(b)).first->second;
}

bool StepZones::overlapping(std::int32_t j) const { return balls(j).overlap; }

StepZones::Zone StepZones::zone(const VertexId& v) const {
    const auto j = step_of(v);
    if (j == 0) return Zone::None;
    const auto& b = balls(j);
    if (b.overlap) return Zone::Both;
    const auto o = offset_in_step(squared_, v);
    if (std::binary_search(b.left.begin(), b.left.end(), o)) return Zone::Left;
    if (std::binary_search(b.right.begin(), b.right.end(), o)) return Zone::Right;
    return Zone::Middle;
}

CrossingWord crossing_word(const StepZones& zones, const SpaceOracle& staircase, const std::vector<VertexId>& path,
                           std::size_t from, std::size_t to) {
    using Zone = StepZones::Zone;
    if (to >= path.size() || from > to) throw InputError("crossing window out of range");
    for (auto x = from; x < to; ++x) {
        if (path[x] != path[x + 1] && distance(staircase, path[x], path[x + 1]) > zones.a()) {
            throw InputError("not an A-path at index " + std::to_string(x));
        }
    }
    CrossingWord w;
    auto x = from;
    while (x < to) {
        const auto z = zones.zone(path[x]);
        if (z != Zone::Left && z != Zone::Right) {
            ++x;
            continue;
        }
        const auto j = step_of(path[x]);
        auto y = x + 1;
        while (y <= to && step_of(path[y]) == j && zones.zone(path[y]) == Zone::Middle) ++y;
        if (y > to) break;
        const auto zy = zones.zone(path[y]);
        if (step_of(path[y]) == j && ((z == Zone::Left && zy == Zone::Right) || (z == Zone::Right && zy == Zone::Left))) {
            w.push_back({z == Zone::Left, j, static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)});
        }
        x = y;
    }
    return w;
}

CrossingWord crossing_word(const SpaceOracle& staircase, const std::vector<VertexId>& path, Radius a) {
    if (path.empty()) return {};
    StepZones zones(staircase, a);
    return crossing_word(zones, staircase, path, 0, path.size() - 1);
}

BehaviorWord reduce_word(const std::vector<Letter>& w) {
    BehaviorWord out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().inverse_of(l)) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

FactCheck behavior_invariants(const std::vector<Letter>& w, std::int64_t h) {
    FactCheck f;
    f.nonempty = !w.empty();
    f.alternating = true;
    for (std::size_t i = 1; i < w.size(); ++i) f.alternating = f.alternating && w[i].forward != w[i - 1].forward;
    f.forward_ends = !w.empty() && w.front().forward && w.back().forward;
    f.no_top_letter = std::none_of(w.begin(), w.end(), [&](const Letter& l) { return l.step == h; });
    return f;
}

RowAnalysis analyse_row(const SpaceOracle& staircase, const LatticeHomotopy& phi, std::int64_t h,
                        const StepZones& zones) {
    RowAnalysis r;
    r.h = h;
    r.path.push_back(phi.at(0, h));
    r.sample_at.push_back(0);
    for (std::int64_t i = 0; i < h; ++i) {
        const auto seg = geodesic(staircase, phi.at(i, h), phi.at(i + 1, h));
        r.path.insert(r.path.end(), seg.begin() + 1, seg.end());
        r.sample_at.push_back(static_cast<std::int64_t>(r.path.size()) - 1);
    }
    r.clear = std::all_of(r.path.begin(), r.path.end(), [&](const VertexId& v) { return step_of(v) > zones.a(); });
    r.cross = crossing_word(zones, staircase, r.path, 0, r.path.size() - 1);
    r.behav = reduce_word(r.cross);
    r.cross_facts = behavior_invariants(r.cross, h);
    r.behav_facts = behavior_invariants(r.behav, h);
    return r;
}

StabilityReport stability_scan(const SpaceOracle& staircase, const LatticeHomotopy& phi, const VertexRay& first,
                               const VertexRay& second, Radius a, std::int64_t h_min, std::int64_t h_max) {
    if (h_min < 1 || h_min > h_max) throw InputError("row range must satisfy 1 <= h_min <= h_max");
    if (h_max > phi.height()) throw HorizonError("row range exceeds the candidate's height " + std::to_string(phi.height()));
    for (std::int64_t h = 0; h <= h_max; ++h) {
        if (first.at(h) != phi.at(0, h) || second.at(h) != phi.at(h, h)) {
            throw InputError("candidate does not have the given end rays at row " + std::to_string(h));
        }
    }
    StepZones zones(staircase, a);
    StabilityReport rep;
    rep.a = a;
    rep.h_min = h_min;
    rep.h_max = h_max;
    for (auto h = h_min; h <= h_max; ++h) rep.rows.push_back(analyse_row(staircase, phi, h, zones));

    std::optional<std::size_t> start;
    for (std::size_t k = rep.rows.size(); k-- > 0;) {
        if (!rep.rows[k].clear) break;
        start = k;
    }
    if (!start) {
        rep.diagnosis = "no row in range clears step(A)";
        return rep;
    }
    rep.threshold = rep.rows[*start].h;
    rep.facts_hold = true;
    for (auto k = *start; k < rep.rows.size(); ++k) {
        const auto& row = rep.rows[k];
        rep.facts_hold = rep.facts_hold && row.cross_facts.all() && row.behav_facts.all();
        if (k > *start && !rep.disagreement && !same_word(row.behav, rep.rows[k - 1].behav)) {
            rep.disagreement = std::make_pair(rep.rows[k - 1].h, row.h);
            rep.diagnosis = "behav(u_" + std::to_string(rep.rows[k - 1].h) + ") = " + word_to_string(rep.rows[k - 1].behav) +
                            " but behav(u_" + std::to_string(row.h) + ") = " + word_to_string(row.behav);
        }
    }
    if (!rep.disagreement) rep.stable = rep.rows[*start].behav;
    return rep;
}

Refutation refute_properness(const SpaceOracle& staircase, const StabilityReport& scan) {
    if (!scan.stable || scan.stable->empty()) throw InputError("no stable nonempty behaviour word; refutation unavailable");
    Refutation ref;
    ref.step = std::min_element(scan.stable->begin(), scan.stable->end(), [](const Letter& a, const Letter& b) {
                   return a.step < b.step;
               })->step;
    for (const auto& row : scan.rows) {
        if (row.h < *scan.threshold) continue;
        for (const auto& l : row.cross) {
            if (l.step != ref.step) continue;
            RefutationPoint p;
            p.h = row.h;
            p.path_index = l.forward ? l.start : l.end;  // the endpoint inside OB(alpha(j), A)
            p.image = row.path[static_cast<std::size_t>(p.path_index)];
            auto it = std::upper_bound(row.sample_at.begin(), row.sample_at.end(), p.path_index);
            p.lattice_index = std::max<std::int64_t>(0, (it - row.sample_at.begin()) - 1);
            ref.points.push_back(std::move(p));
            break;
        }
    }
    for (std::size_t i = 0; i < ref.points.size(); ++i) {
        for (std::size_t k = i + 1; k < ref.points.size(); ++k) {
            ref.image_diameter = std::max(ref.image_diameter, distance(staircase, ref.points[i].image, ref.points[k].image));
        }
    }
    if (!ref.points.empty()) ref.lattice_spread = ref.points.back().h - ref.points.front().h;
    return ref;
}

std::vector<std::string> adversarial_generators() {
    return {"direct-crosser", "ray-hugger", "step-bouncer", "ladder", "late-crosser"};
}

LatticeHomotopy generate_candidate(const SpaceOracle& staircase, const std::string& id, std::int64_t height,
                                   std::int32_t c) {
    const bool sq = squared_steps(staircase);
    if (c < 1) throw InputError("crossing step must be positive");
    const auto n_max = staircase.spec()["params"].at("n_max").get<std::int64_t>();
    if (height > n_max) throw InputError("candidate height exceeds the staircase's n_max");
    const std::vector<std::string> known{"direct-crosser", "ray-hugger",   "step-bouncer",    "ladder",
                                         "late-crosser",   "constant",     "drifting-crosser", "midpoint-crosser"};
    if (std::find(known.begin(), known.end(), id) == known.end()) throw InputError("unknown generator '" + id + "'");

    auto cross_at = [&](Walk& w, std::int32_t h, std::int32_t j) {
        w.ray(kLeft, h, j);
        w.step(sq, j, 0, step_length(sq, j));
        w.ray(kRight, j, h);
    };
    auto through_root = [&](std::int32_t h) {
        Walk w;
        w.ray(kLeft, h, 0);
        w.ray(kRight, 0, h);
        return w;
    };

    std::vector<std::vector<VertexId>> rows;
    for (std::int64_t hh = 0; hh <= height; ++hh) {
        const auto h = static_cast<std::int32_t>(hh);
        Walk w;
        std::int64_t linger = 0;
        if (id == "constant") {
            rows.emplace_back(static_cast<std::size_t>(h + 1), staircase_left(h));
            continue;
        } else if (id == "drifting-crosser") {
            if (h == 0) {
                rows.push_back({staircase_left(0)});
                continue;
            }
            cross_at(w, h, h);
        } else if (id == "midpoint-crosser") {
            if (h == 0) {
                rows.push_back({staircase_left(0)});
                continue;
            }
            cross_at(w, h, std::max(1, (h + 1) / 2));
        } else if (h < c + 8) {
            w = through_root(h);
        } else if (id == "direct-crosser") {
            cross_at(w, h, c);
        } else if (id == "late-crosser") {
            cross_at(w, h, c + 3);
        } else if (id == "ray-hugger") {
            cross_at(w, h, c);
            linger = h / 2;
        } else if (id == "step-bouncer") {
            const auto len = step_length(sq, c);
            w.ray(kLeft, h, c);
            w.step(sq, c, 0, len);
            w.step(sq, c, len, 0);
            w.step(sq, c, 0, (2 * len) / 3);
            w.step(sq, c, (2 * len) / 3, 0);
            w.step(sq, c, 0, len);
            w.ray(kRight, c, h);
        } else {  // ladder
            w.ray(kLeft, h, c);
            w.step(sq, c, 0, step_length(sq, c));
            w.ray(kRight, c, c + 2);
            w.step(sq, c + 2, step_length(sq, c + 2), 0);
            w.ray(kLeft, c + 2, c + 4);
            w.step(sq, c + 4, 0, step_length(sq, c + 4));
            w.ray(kRight, c + 4, h);
        }
        if (h == 0) {
            rows.push_back({staircase_left(0)});
            continue;
        }
        rows.push_back(sample_walk(w, h, linger));
    }
    return LatticeHomotopy(std::move(rows));
}

}  // namespace coarse
