#ifndef COARSE_VERTEX_HPP
#define COARSE_VERTEX_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coarse {

// Opaque vertex handle. The key layout is owned by the space that issued it:
// coordinates for lattices, a reduced word for trees, (region, height, offset)
// for the staircase, an index for finite graphs.
struct VertexId {
    std::vector<std::int32_t> key;

    VertexId() = default;
    VertexId(std::initializer_list<std::int32_t> k) : key(k) {}
    explicit VertexId(std::vector<std::int32_t> k) : key(std::move(k)) {}

    friend bool operator==(const VertexId&, const VertexId&) = default;
    friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) {
        return std::lexicographical_compare_three_way(a.key.begin(), a.key.end(),
                                                      b.key.begin(), b.key.end());
    }
};

struct VertexIdHash {
    std::size_t operator()(const VertexId& v) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL ^ v.key.size();
        for (auto x : v.key) {
            h ^= static_cast<std::uint32_t>(x);
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return h;
    }
};

// Malformed input: unknown kind, bad parameters, asymmetric edge list, ...
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A query reached beyond the radius an oracle guarantees to enumerate exactly.
class HorizonError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace coarse

#endif  // COARSE_VERTEX_HPP
