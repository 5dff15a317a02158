#include "tessella/generators.hpp"

#include "tessella/patch_io.hpp"

#include <array>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace tessella {

namespace {

constexpr std::size_t kFaceGuard = 2'000'000;

/// Incremental {p,q} disc. The current disc boundary is a doubly linked
/// cyclic vertex list; count[v] is the number of faces already attached at v.
/// One p-gon is attached per step along a boundary path; the path is extended
/// through every endpoint whose gap is down to a single face, so fans close
/// exactly when they reach degree q.
struct RegularGrower {
    unsigned p, q;
    std::vector<std::vector<VertexId>> cycles;
    VertexId next_vertex = 0;
    std::unordered_map<VertexId, VertexId> next, prev;
    std::unordered_map<VertexId, unsigned> count;
    std::set<VertexId> boundary;

    RegularGrower(unsigned p_, unsigned q_) : p(p_), q(q_) {
        std::vector<VertexId> cycle;
        for (unsigned i = 0; i < p; ++i) cycle.push_back(next_vertex++);
        for (unsigned i = 0; i < p; ++i) {
            const VertexId v = cycle[i], w = cycle[(i + 1) % p];
            next[v] = w;
            prev[w] = v;
            count[v] = 1;
            boundary.insert(v);
        }
        cycles.push_back(std::move(cycle));
    }

    void attach(VertexId front, VertexId back, std::size_t t) {
        if (t > p - 1) throw GeneratorError("forced face larger than a p-gon");
        std::vector<VertexId> path;
        path.reserve(t + 1);
        VertexId v = front;
        path.push_back(v);
        for (std::size_t i = 0; i < t; ++i) {
            v = next.at(v);
            path.push_back(v);
        }

        std::vector<VertexId> cycle(path.rbegin(), path.rend());
        const std::size_t fresh_vertices = (p - t) - 1;
        std::vector<VertexId> nv;
        for (std::size_t i = 0; i < fresh_vertices; ++i) nv.push_back(next_vertex++);
        cycle.insert(cycle.end(), nv.begin(), nv.end());
        cycles.push_back(std::move(cycle));

        for (const VertexId u : path) ++count[u];
        for (std::size_t i = 1; i + 1 <= t && i <= t - 1; ++i) {
            const VertexId u = path[i];
            if (count[u] != q) throw GeneratorError("interior path vertex did not close");
            boundary.erase(u);
        }
        if (count[front] >= q || count[back] >= q)
            throw GeneratorError("boundary vertex overfilled");

        VertexId cur = front;
        for (const VertexId u : nv) {
            next[cur] = u;
            prev[u] = cur;
            count[u] = 1;
            boundary.insert(u);
            cur = u;
        }
        next[cur] = back;
        prev[back] = cur;
    }

    void complete_vertex(VertexId v) {
        while (boundary.count(v)) {
            VertexId front = prev.at(v);
            VertexId back = v;
            std::size_t t = 1;
            while (count.at(front) == q - 1 && t < p) {
                front = prev.at(front);
                ++t;
            }
            while (count.at(back) == q - 1 && t < p) {
                back = next.at(back);
                ++t;
            }
            attach(front, back, t);
            if (cycles.size() > kFaceGuard) throw GeneratorError("patch size guard exceeded");
        }
    }

    std::vector<VertexId> boundary_walk() const {
        std::vector<VertexId> out;
        if (boundary.empty()) return out;
        const VertexId start = *boundary.begin();
        VertexId v = start;
        do {
            out.push_back(v);
            v = next.at(v);
        } while (v != start);
        return out;
    }

    void run_layer() {
        for (const VertexId v : boundary_walk())
            if (boundary.count(v)) complete_vertex(v);
    }

    /// True once every face at window distance <= r has all vertices closed.
    /// Checked layer by layer, which also makes the window distances faithful
    /// up to r+1.
    bool ball_closed(unsigned r) const {
        std::map<std::pair<VertexId, VertexId>, FaceId> owner;
        for (FaceId f = 0; f < cycles.size(); ++f) {
            const auto& c = cycles[f];
            for (std::size_t i = 0; i < c.size(); ++i) owner[{c[i], c[(i + 1) % c.size()]}] = f;
        }
        std::vector<int> dist(cycles.size(), -1);
        std::deque<FaceId> queue{0};
        dist[0] = 0;
        while (!queue.empty()) {
            const FaceId f = queue.front();
            queue.pop_front();
            if (static_cast<unsigned>(dist[f]) <= r)
                for (const VertexId v : cycles[f])
                    if (boundary.count(v)) return false;
            if (static_cast<unsigned>(dist[f]) >= r + 1) continue;
            const auto& c = cycles[f];
            for (std::size_t i = 0; i < c.size(); ++i) {
                const auto it = owner.find({c[(i + 1) % c.size()], c[i]});
                if (it == owner.end() || dist[it->second] >= 0) continue;
                dist[it->second] = dist[f] + 1;
                queue.push_back(it->second);
            }
        }
        return true;
    }
};

} // namespace

GeneratedPatch generate_regular(unsigned p, unsigned q, unsigned radius) {
    if (p < 3 || q < 3) throw InputError("regular tiling needs p >= 3 and q >= 3");
    if (2 * (p + q) > p * q)
        throw InputError("spherical parameters rejected: 1/" + std::to_string(p) + " + 1/" +
                         std::to_string(q) + " > 1/2");

    RegularGrower grower(p, q);
    const unsigned layer_guard = radius + 8;
    unsigned layer = 0;
    while (!grower.ball_closed(radius)) {
        if (++layer > layer_guard) throw GeneratorError("layer guard exceeded");
        grower.run_layer();
        if (grower.cycles.size() > kFaceGuard) throw GeneratorError("patch size guard exceeded");
    }

    TessellationPatch::FaceMap faces;
    for (FaceId f = 0; f < grower.cycles.size(); ++f) faces.emplace(f, grower.cycles[f]);
    std::set<VertexId> complete_vertices;
    for (const auto& [v, c] : grower.count)
        if (!grower.boundary.count(v)) complete_vertices.insert(v);
    std::set<FaceId> complete_faces;
    for (FaceId f = 0; f < grower.cycles.size(); ++f) complete_faces.insert(f);

    return {TessellationPatch::build(std::move(faces), std::move(complete_vertices),
                                     std::move(complete_faces)),
            0};
}

namespace {

// Trihexagonal lattice bookkeeping. Hexagon centers live on the triangular
// lattice Z^2 (axial coordinates); a kagome vertex is the tangent point of
// two adjacent hexagons and is keyed by the sum 2c + d of the center and the
// step direction. Triangles sit in the corners between consecutive
// directions. All adjacency is combinatorial, so there are no window effects
// before the cut.
using Axial = std::pair<int, int>;

constexpr std::array<Axial, 6> kDirs = {{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

Axial add(Axial a, Axial b) { return {a.first + b.first, a.second + b.second}; }
Axial scale2(Axial a) { return {2 * a.first, 2 * a.second}; }

struct KagomeFace {
    bool hexagon;
    Axial center;   // hexagon center, or the corner's base center
    unsigned dir=0; // triangles: corner between kDirs[dir] and kDirs[dir+1]
};

std::array<Axial, 3> triangle_vertices(Axial c, unsigned i) {
    const Axial a = add(scale2(c), kDirs[i]);
    const Axial b = add(scale2(c), kDirs[(i + 1) % 6]);
    const Axial m = add(add(scale2(c), kDirs[i]), kDirs[(i + 1) % 6]);
    return {a, m, b}; // counterclockwise
}

std::array<Axial, 3> triangle_key(Axial c, unsigned i) {
    auto v = triangle_vertices(c, i);
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

GeneratedPatch generate_kagome(unsigned radius) {
    if (radius < 1) throw InputError("kagome radius must be >= 1");
    if (radius > 300) throw GeneratorError("patch size guard exceeded");
    const unsigned keep = radius + 2;

    std::map<Axial, unsigned> hex_dist;
    std::map<std::array<Axial, 3>, unsigned> tri_dist;
    std::deque<KagomeFace> queue;
    hex_dist[{0, 0}] = 0;
    queue.push_back({true, {0, 0}, 0});

    TessellationPatch::FaceMap faces;
    std::map<Axial, VertexId> vertex_ids;
    std::map<VertexId, unsigned> fan_count;
    FaceId next_face = 0;

    auto vertex_id = [&](Axial key) {
        const auto it = vertex_ids.find(key);
        if (it != vertex_ids.end()) return it->second;
        const VertexId id = static_cast<VertexId>(vertex_ids.size());
        vertex_ids.emplace(key, id);
        return id;
    };

    while (!queue.empty()) {
        const KagomeFace f = queue.front();
        queue.pop_front();
        const unsigned d = f.hexagon ? hex_dist.at(f.center) : tri_dist.at(triangle_key(f.center, f.dir));

        std::vector<VertexId> cycle;
        if (f.hexagon) {
            for (unsigned i = 0; i < 6; ++i)
                cycle.push_back(vertex_id(add(scale2(f.center), kDirs[i])));
        } else {
            for (const Axial v : triangle_vertices(f.center, f.dir)) cycle.push_back(vertex_id(v));
        }
        for (const VertexId v : cycle) ++fan_count[v];
        faces.emplace(next_face++, std::move(cycle));

        if (d >= keep) continue; // emitted, but neighbours beyond the cut
        if (f.hexagon) {
            for (unsigned i = 0; i < 6; ++i) {
                const auto key = triangle_key(f.center, i);
                if (tri_dist.emplace(key, d + 1).second) queue.push_back({false, f.center, i});
            }
        } else {
            const std::array<Axial, 3> hexes = {f.center, add(f.center, kDirs[f.dir]),
                                                add(f.center, kDirs[(f.dir + 1) % 6])};
            for (const Axial h : hexes)
                if (hex_dist.emplace(h, d + 1).second) queue.push_back({true, h, 0});
        }
    }

    std::set<VertexId> complete_vertices;
    for (const auto& [v, n] : fan_count)
        if (n == 4) complete_vertices.insert(v);
    std::set<FaceId> complete_faces;
    for (FaceId f = 0; f < next_face; ++f) complete_faces.insert(f);

    return {TessellationPatch::build(std::move(faces), std::move(complete_vertices),
                                     std::move(complete_faces)),
            0};
}

GeneratedPatch generate(const GenSpec& spec) {
    switch (spec.kind) {
    case GenSpec::Kind::Regular:
        return generate_regular(spec.p, spec.q, spec.radius);
    case GenSpec::Kind::Kagome:
        return generate_kagome(spec.radius);
    case GenSpec::Kind::FromFile: {
        std::ifstream in(spec.path);
        if (!in) throw InputError("cannot open '" + spec.path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        TessellationPatch patch = load_patch(buf.str());
        if (patch.face_count() == 0) throw InputError("patch file has no faces");
        const FaceId base = patch.faces().begin()->first;
        return {std::move(patch), base};
    }
    }
    throw InputError("unknown generator kind");
}

} // namespace tessella
