#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hochex {

// Finite quiver.  Vertices are 0-based internally; serialization and reports
// use 1-based vertex labels.  Arrows are indexed 0..|arrows|-1.
struct Quiver {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (source, target)

    bool operator==(const Quiver&) const = default;
};

// A path is either trivial (a vertex) or a composable arrow-index sequence.
// Composition is left-to-right: in a1 a2 one traverses a1 first, so
// target(a1) = source(a2).
struct Path {
    std::size_t source = 0;          // start vertex (defines trivial paths)
    std::vector<std::size_t> arrows;  // arrow indices

    std::size_t length() const { return arrows.size(); }
    bool trivial() const { return arrows.empty(); }

    bool operator==(const Path&) const = default;
};

std::size_t path_target(const Quiver& q, const Path& p);
bool path_valid(const Quiver& q, const Path& p);
// Concatenation in the path algebra sense; returns false when sources and
// targets do not match.
bool compose_paths(const Quiver& q, const Path& a, const Path& b, Path& out);
// Ordering: by length, then lexicographically on arrow indices (trivial paths
// by vertex).  This is the basis order used everywhere.
bool path_less(const Path& a, const Path& b);
std::string path_str(const Path& p);

struct CycleOrbit {
    Path representative;           // lexicographically least rotation
    std::vector<Path> members;     // all distinct rotations, sorted
};

// Cyclic quiver with s vertices and arrows x_i : i -> i+1 (mod s).
Quiver cyclic_quiver(std::size_t s);

// All composable arrow sequences of length len, in basis order.
std::vector<Path> paths_of_length(const Quiver& q, std::size_t len);
// Paths of length len with equal source and target.
std::vector<Path> cycles(const Quiver& q, std::size_t len);
// Rotation of a cycle: moves the last arrow to the front.
Path rotate_cycle(const Quiver& q, const Path& c);
// Partition of equal-length cycles into rotation orbits, sorted by
// representative.  Rejects non-cycles and mixed lengths.
std::vector<CycleOrbit> orbit_decomposition(const Quiver& q,
                                            const std::vector<Path>& cycles);
// True iff the cycle is not a proper power of a shorter cycle.
bool is_basic(const Quiver& q, const Path& cycle);

// JSON round-trip with 1-based vertices: {"vertices": s, "arrows": [[u,v],..]}.
std::string quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const std::string& text);

}  // namespace hochex
