#include "hochex/quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hochex {

std::size_t path_target(const Quiver& q, const Path& p) {
    if (p.trivial()) return p.source;
    return q.arrows[p.arrows.back()].second;
}

bool path_valid(const Quiver& q, const Path& p) {
    if (p.source >= q.vertex_count) return false;
    std::size_t at = p.source;
    for (std::size_t a : p.arrows) {
        if (a >= q.arrows.size()) return false;
        if (q.arrows[a].first != at) return false;
        at = q.arrows[a].second;
    }
    return true;
}

bool compose_paths(const Quiver& q, const Path& a, const Path& b, Path& out) {
    if (path_target(q, a) != b.source) return false;
    out.source = a.source;
    out.arrows = a.arrows;
    out.arrows.insert(out.arrows.end(), b.arrows.begin(), b.arrows.end());
    return true;
}

bool path_less(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.trivial()) return a.source < b.source;
    return a.arrows < b.arrows;
}

std::string path_str(const Path& p) {
    std::ostringstream os;
    if (p.trivial()) {
        os << "e" << (p.source + 1);
        return os.str();
    }
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) os << ".";
        os << "a" << p.arrows[i];
    }
    return os.str();
}

Quiver cyclic_quiver(std::size_t s) {
    if (s == 0) throw std::invalid_argument("cyclic quiver needs s >= 1");
    Quiver q;
    q.vertex_count = s;
    for (std::size_t i = 0; i < s; ++i) q.arrows.push_back({i, (i + 1) % s});
    return q;
}

namespace {

void extend_paths(const Quiver& q,
                  const std::vector<std::vector<std::size_t>>& out_arrows,
                  Path& cur, std::size_t remaining, std::vector<Path>& sink) {
    if (remaining == 0) {
        sink.push_back(cur);
        return;
    }
    std::size_t at = path_target(q, cur);
    for (std::size_t a : out_arrows[at]) {
        cur.arrows.push_back(a);
        extend_paths(q, out_arrows, cur, remaining - 1, sink);
        cur.arrows.pop_back();
    }
}

}  // namespace

std::vector<Path> paths_of_length(const Quiver& q, std::size_t len) {
    std::vector<Path> out;
    if (len == 0) {
        for (std::size_t v = 0; v < q.vertex_count; ++v)
            out.push_back(Path{v, {}});
        return out;
    }
    std::vector<std::vector<std::size_t>> out_arrows(q.vertex_count);
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        out_arrows[q.arrows[a].first].push_back(a);
    // First arrows in increasing index order make the output lexicographic.
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        Path cur{q.arrows[a].first, {a}};
        extend_paths(q, out_arrows, cur, len - 1, out);
    }
    return out;
}

std::vector<Path> cycles(const Quiver& q, std::size_t len) {
    if (len == 0) throw std::invalid_argument("cycles need length >= 1");
    std::vector<Path> out;
    for (Path& p : paths_of_length(q, len))
        if (path_target(q, p) == p.source) out.push_back(std::move(p));
    return out;
}

Path rotate_cycle(const Quiver& q, const Path& c) {
    if (c.trivial() || path_target(q, c) != c.source)
        throw std::invalid_argument("rotate_cycle needs a nontrivial cycle");
    Path r;
    r.arrows.reserve(c.arrows.size());
    r.arrows.push_back(c.arrows.back());
    r.arrows.insert(r.arrows.end(), c.arrows.begin(), c.arrows.end() - 1);
    r.source = q.arrows[r.arrows.front()].first;
    return r;
}

std::vector<CycleOrbit> orbit_decomposition(const Quiver& q,
                                            const std::vector<Path>& cs) {
    std::size_t len = 0;
    for (const Path& c : cs) {
        if (c.trivial() || !path_valid(q, c) || path_target(q, c) != c.source)
            throw std::invalid_argument("orbit_decomposition: non-cycle input");
        if (len == 0) len = c.length();
        if (c.length() != len)
            throw std::invalid_argument("orbit_decomposition: mixed lengths");
    }
    std::map<std::vector<std::size_t>, std::vector<Path>> buckets;
    for (const Path& c : cs) {
        // Lexicographically least rotation of the arrow sequence.
        Path best = c, cur = c;
        for (std::size_t i = 1; i < c.length(); ++i) {
            cur = rotate_cycle(q, cur);
            if (cur.arrows < best.arrows) best = cur;
        }
        buckets[best.arrows].push_back(c);
    }
    std::vector<CycleOrbit> orbits;
    for (auto& [rep_arrows, members] : buckets) {
        CycleOrbit o;
        o.representative = Path{q.arrows[rep_arrows.front()].first, rep_arrows};
        std::sort(members.begin(), members.end(), path_less);
        members.erase(std::unique(members.begin(), members.end()),
                      members.end());
        o.members = std::move(members);
        orbits.push_back(std::move(o));
    }
    return orbits;  // std::map keys ascending = sorted by representative
}

bool is_basic(const Quiver& q, const Path& cycle) {
    if (cycle.trivial() || !path_valid(q, cycle) ||
        path_target(q, cycle) != cycle.source)
        throw std::invalid_argument("is_basic needs a cycle");
    std::size_t len = cycle.length();
    for (std::size_t d = 1; d < len; ++d) {
        if (len % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = 0; i + d < len && periodic; ++i)
            periodic = cycle.arrows[i] == cycle.arrows[i + d];
        if (periodic) return false;  // cycle = (first d arrows)^(len/d)
    }
    return true;
}

std::string quiver_to_json(const Quiver& q) {
    nlohmann::ordered_json j;
    j["vertices"] = q.vertex_count;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [u, v] : q.arrows)
        arr.push_back(nlohmann::ordered_json::array({u + 1, v + 1}));
    j["arrows"] = arr;
    return j.dump();
}

Quiver quiver_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Quiver q;
    q.vertex_count = j.at("vertices").get<std::size_t>();
    for (const auto& a : j.at("arrows")) {
        std::size_t u = a.at(0).get<std::size_t>();
        std::size_t v = a.at(1).get<std::size_t>();
        if (u < 1 || u > q.vertex_count || v < 1 || v > q.vertex_count)
            throw std::invalid_argument("quiver JSON: vertex out of range");
        q.arrows.push_back({u - 1, v - 1});
    }
    return q;
}

}  // namespace hochex
