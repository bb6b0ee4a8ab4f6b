#ifndef COARSE_OBSTRUCTION_HPP
#define COARSE_OBSTRUCTION_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coarse/homotopy.hpp"
#include "coarse/ray.hpp"
#include "coarse/space.hpp"

namespace coarse {

// Staircase addresses. The root is L0; step(n) consists of L_n, R_n and the
// interior points S_n:o between them.
struct StaircaseAddress {
    enum class Region { LeftRay, RightRay, StepInterior };
    Region region = Region::LeftRay;
    std::int32_t height = 0;
    std::int32_t offset = 0;
};

StaircaseAddress staircase_address(const VertexId& v);
VertexId staircase_left(std::int32_t n);   // alpha(n)
VertexId staircase_right(std::int32_t n);  // alpha'(n)
// Offset o along step(n): 0 is L_n, len(n) is R_n.
VertexId staircase_step_point(const SpaceOracle& staircase, std::int32_t n, std::int32_t offset);
std::int32_t staircase_step_length(const SpaceOracle& staircase, std::int32_t n);
// The step containing v, or 0 for the root.
std::int32_t step_of(const VertexId& v);

VertexRay staircase_alpha(std::int64_t length);        // left ray
VertexRay staircase_alpha_prime(std::int64_t length);  // right ray

struct Letter {
    bool forward = true;
    std::int32_t step = 0;
    std::int64_t start = 0;  // path index of the crossing's start
    std::int64_t end = 0;    // path index of the crossing's end

    bool same_letter(const Letter& o) const { return forward == o.forward && step == o.step; }
    bool inverse_of(const Letter& o) const { return forward != o.forward && step == o.step; }
};

using CrossingWord = std::vector<Letter>;
using BehaviorWord = std::vector<Letter>;

std::string word_to_string(const std::vector<Letter>& w);  // "f4 b6 f8", or "e" when empty
std::vector<Letter> parse_word(const std::string& text);

// Membership of step(j) vertices in OB(alpha(j), A) and OB(alpha'(j), A),
// with the balls taken in the staircase metric. Memoised per step.
class StepZones {
public:
    enum class Zone { None, Left, Right, Middle, Both };

    StepZones(const SpaceOracle& staircase, Radius a);
    Zone zone(const VertexId& v) const;
    // The two balls meet inside step(j); no crossing of step(j) is defined.
    bool overlapping(std::int32_t j) const;
    Radius a() const { return a_; }

private:
    struct Balls {
        std::vector<std::int32_t> left, right;  // sorted offsets
        bool overlap = false;
    };
    const Balls& balls(std::int32_t j) const;

    const SpaceOracle& space_;
    Radius a_;
    bool squared_;
    mutable std::unordered_map<std::int32_t, Balls> cache_;
};

// All forward and backward crossings of path[from..to] in path order.
// Throws InputError if two consecutive path points are more than A apart.
CrossingWord crossing_word(const SpaceOracle& staircase, const std::vector<VertexId>& path, Radius a);
CrossingWord crossing_word(const StepZones& zones, const SpaceOracle& staircase, const std::vector<VertexId>& path,
                           std::size_t from, std::size_t to);

// Free reduction under f_j^-1 = b_j. Letters keep their witness windows.
BehaviorWord reduce_word(const std::vector<Letter>& w);

struct FactCheck {
    bool nonempty = false;       // (1)
    bool alternating = false;    // (2)
    bool forward_ends = false;   // (3)
    bool no_top_letter = false;  // (4) no f_h or b_h
    bool all() const { return nonempty && alternating && forward_ends && no_top_letter; }
};

FactCheck behavior_invariants(const std::vector<Letter>& w, std::int64_t h);

struct RowAnalysis {
    std::int64_t h = 0;
    std::vector<VertexId> path;       // geodesically interpolated row
    std::vector<std::int64_t> sample_at;  // path index of lattice point (i, h)
    CrossingWord cross;
    BehaviorWord behav;
    bool clear = false;               // image avoids alpha[0,A], alpha'[0,A] and steps <= A
    FactCheck cross_facts, behav_facts;
};

// Joins consecutive row points by staircase geodesics.
RowAnalysis analyse_row(const SpaceOracle& staircase, const LatticeHomotopy& phi, std::int64_t h,
                        const StepZones& zones);

struct StabilityReport {
    Radius a = 0;
    std::int64_t h_min = 0, h_max = 0;
    std::vector<RowAnalysis> rows;
    std::optional<std::int64_t> threshold;     // first row from which every row is clear
    std::optional<BehaviorWord> stable;        // set when all rows past the threshold agree
    std::optional<std::pair<std::int64_t, std::int64_t>> disagreement;
    std::string diagnosis;
    bool facts_hold = false;                   // facts (1)-(4) for cross and behav on every row past the threshold
};

// Endrays are checked: phi(0, h) = first(h) and phi(h, h) = second(h).
StabilityReport stability_scan(const SpaceOracle& staircase, const LatticeHomotopy& phi, const VertexRay& first,
                               const VertexRay& second, Radius a, std::int64_t h_min, std::int64_t h_max);

struct RefutationPoint {
    std::int64_t h = 0;
    std::int64_t path_index = 0;     // on the interpolated row
    std::int64_t lattice_index = 0;  // i with path_index in [sample_at(i), sample_at(i+1))
    VertexId image;
};

struct Refutation {
    std::int32_t step = 0;
    std::vector<RefutationPoint> points;  // one per row
    Radius image_diameter = 0;            // bounded: all images inside OB(alpha(j), A)
    std::int64_t lattice_spread = 0;      // row span of the witness set
};

// Throws InputError if the stable word is empty.
Refutation refute_properness(const SpaceOracle& staircase, const StabilityReport& scan);

// Candidate generators on the staircase, all with rows for h = 0..height.
// Crossers use endrays alpha, alpha'; "constant" uses alpha at both ends.
std::vector<std::string> adversarial_generators();  // the crossing families
LatticeHomotopy generate_candidate(const SpaceOracle& staircase, const std::string& id, std::int64_t height,
                                   std::int32_t step = 6);

}  // namespace coarse

#endif  // COARSE_OBSTRUCTION_HPP
