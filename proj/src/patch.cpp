#include "tessella/patch.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tessella {

namespace {

std::string describe_face(FaceId f) { return "face " + std::to_string(f); }

void sort_unique(std::vector<VertexId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

TessellationPatch TessellationPatch::build(FaceMap faces, std::set<VertexId> complete_vertices,
                                           std::set<FaceId> complete_faces) {
    TessellationPatch p;
    p.faces_ = std::move(faces);

    std::map<VertexId, std::vector<FaceId>> vertex_faces;
    std::map<VertexId, std::vector<VertexId>> vertex_neighbors;
    std::set<std::pair<VertexId, VertexId>> edge_set;

    for (const auto& [fid, cycle] : p.faces_) {
        if (cycle.size() < 2)
            throw InputError(describe_face(fid) + ": cycle needs at least two vertices");
        std::set<VertexId> seen;
        for (const VertexId v : cycle)
            if (!seen.insert(v).second)
                throw InputError(describe_face(fid) + ": non-simple cycle (vertex " +
                                 std::to_string(v) + " repeats)");
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const VertexId v = cycle[i];
            const VertexId w = cycle[(i + 1) % cycle.size()];
            vertex_faces[v].push_back(fid);
            vertex_neighbors[v].push_back(w);
            vertex_neighbors[w].push_back(v);
            edge_set.insert(std::minmax(v, w));
            // first writer wins; duplicates are reported by validate_patch
            p.directed_edge_face_.emplace(std::pair{v, w}, fid);
        }
    }

    for (auto& [v, fs] : vertex_faces) {
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    }
    for (auto& [v, ns] : vertex_neighbors) sort_unique(ns);
    p.vertex_faces_ = std::move(vertex_faces);
    p.vertex_neighbors_ = std::move(vertex_neighbors);
    p.edges_.assign(edge_set.begin(), edge_set.end());

    for (const auto& [fid, cycle] : p.faces_) {
        std::vector<FaceId> nbrs;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const VertexId v = cycle[i];
            const VertexId w = cycle[(i + 1) % cycle.size()];
            const auto it = p.directed_edge_face_.find({w, v});
            if (it != p.directed_edge_face_.end() && it->second != fid)
                nbrs.push_back(it->second);
        }
        p.face_neighbors_[fid] = std::move(nbrs);
    }

    for (const VertexId v : complete_vertices)
        if (!p.vertex_faces_.count(v))
            throw InputError("complete vertex " + std::to_string(v) + " occurs in no face");
    for (const FaceId f : complete_faces)
        if (!p.faces_.count(f))
            throw InputError("complete face " + std::to_string(f) + " is not a face");
    p.complete_vertices_ = std::move(complete_vertices);
    p.complete_faces_ = std::move(complete_faces);
    return p;
}

const std::vector<VertexId>& TessellationPatch::face_cycle(FaceId f) const {
    const auto it = faces_.find(f);
    if (it == faces_.end()) throw InputError("unknown face " + std::to_string(f));
    return it->second;
}

const std::vector<VertexId>& TessellationPatch::neighbors(VertexId v) const {
    const auto it = vertex_neighbors_.find(v);
    if (it == vertex_neighbors_.end()) throw InputError("unknown vertex " + std::to_string(v));
    return it->second;
}

const std::vector<FaceId>& TessellationPatch::faces_at(VertexId v) const {
    const auto it = vertex_faces_.find(v);
    if (it == vertex_faces_.end()) throw InputError("unknown vertex " + std::to_string(v));
    return it->second;
}

const std::vector<FaceId>& TessellationPatch::face_neighbors(FaceId f) const {
    const auto it = face_neighbors_.find(f);
    if (it == face_neighbors_.end()) throw InputError("unknown face " + std::to_string(f));
    return it->second;
}

std::optional<FaceId> TessellationPatch::face_with_directed_edge(VertexId from, VertexId to) const {
    const auto it = directed_edge_face_.find({from, to});
    if (it == directed_edge_face_.end()) return std::nullopt;
    return it->second;
}

bool TessellationPatch::has_edge(VertexId a, VertexId b) const {
    return directed_edge_face_.count({a, b}) != 0 || directed_edge_face_.count({b, a}) != 0;
}

std::vector<VertexId> TessellationPatch::vertices() const {
    std::vector<VertexId> out;
    out.reserve(vertex_faces_.size());
    for (const auto& [v, fs] : vertex_faces_) out.push_back(v);
    return out;
}

ValidationReport validate_patch(const TessellationPatch& patch) {
    ValidationReport report;
    auto issue = [&](ValidationIssue::Kind kind, std::string msg) {
        report.issues.push_back({kind, std::move(msg)});
    };

    // structural: cycle lengths
    for (const auto& [fid, cycle] : patch.faces())
        if (cycle.size() < 3)
            issue(ValidationIssue::Kind::Structural,
                  describe_face(fid) + ": cycle length " + std::to_string(cycle.size()) + " < 3");

    // orientation: each directed edge in at most one cycle; also tally
    // undirected edge multiplicities for axiom i
    std::map<std::pair<VertexId, VertexId>, unsigned> directed_count;
    std::map<std::pair<VertexId, VertexId>, unsigned> undirected_count;
    for (const auto& [fid, cycle] : patch.faces())
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const VertexId a = cycle[i], b = cycle[(i + 1) % cycle.size()];
            ++directed_count[{a, b}];
            ++undirected_count[std::minmax(a, b)];
        }
    for (const auto& [e, n] : directed_count)
        if (n > 1)
            issue(ValidationIssue::Kind::Orientation,
                  "directed edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                      ") lies in " + std::to_string(n) + " cycles");

    // axiom i on edges between complete vertices: exactly two faces
    for (const auto& [a, b] : patch.edges()) {
        if (!patch.vertex_complete(a) || !patch.vertex_complete(b)) continue;
        const unsigned n = undirected_count[std::minmax(a, b)];
        if (n != 2)
            issue(ValidationIssue::Kind::EdgeFaceCount,
                  "edge {" + std::to_string(a) + "," + std::to_string(b) + "} lies in " +
                      std::to_string(n) + " face cycles, expected 2");
    }

    // axiom ii on pairs of complete faces that meet at all
    std::set<std::pair<FaceId, FaceId>> checked;
    for (const FaceId f : patch.complete_faces()) {
        const auto& cf = patch.face_cycle(f);
        std::set<VertexId> vf(cf.begin(), cf.end());
        std::set<std::pair<VertexId, VertexId>> ef;
        for (std::size_t i = 0; i < cf.size(); ++i)
            ef.insert(std::minmax(cf[i], cf[(i + 1) % cf.size()]));
        for (const VertexId v : cf) {
            for (const FaceId g : patch.faces_at(v)) {
                if (g <= f || !patch.face_complete(g)) continue;
                if (!checked.insert({f, g}).second) continue;
                const auto& cg = patch.face_cycle(g);
                std::size_t shared_vertices = 0;
                for (const VertexId w : cg) shared_vertices += vf.count(w);
                std::size_t shared_edges = 0;
                for (std::size_t i = 0; i < cg.size(); ++i)
                    shared_edges += ef.count(std::minmax(cg[i], cg[(i + 1) % cg.size()]));
                const bool ok = (shared_edges == 0 && shared_vertices <= 1) ||
                                (shared_edges == 1 && shared_vertices == 2);
                if (!ok)
                    issue(ValidationIssue::Kind::FaceIntersection,
                          "faces " + std::to_string(f) + " and " + std::to_string(g) + " share " +
                              std::to_string(shared_edges) + " edges / " +
                              std::to_string(shared_vertices) + " vertices");
            }
        }
    }

    // complete vertices must have degree >= 3 (degree 2 would force two faces
    // to share two edges)
    for (const VertexId v : patch.complete_vertices())
        if (patch.neighbors(v).size() < 3)
            issue(ValidationIssue::Kind::Degree, "complete vertex " + std::to_string(v) +
                                                     " has degree " +
                                                     std::to_string(patch.neighbors(v).size()));

    return report;
}

std::size_t vertex_degree(const TessellationPatch& patch, VertexId v) {
    if (!patch.vertex_complete(v))
        throw CompletenessError("degree undefined on boundary (vertex " + std::to_string(v) + ")");
    return patch.neighbors(v).size();
}

std::size_t face_size(const TessellationPatch& patch, FaceId f) {
    if (!patch.face_complete(f))
        throw CompletenessError("face size undefined on boundary (face " + std::to_string(f) + ")");
    return patch.face_cycle(f).size();
}

Rational curvature(const TessellationPatch& patch, const Corner& corner) {
    const auto& cycle = patch.face_cycle(corner.face);
    if (std::find(cycle.begin(), cycle.end(), corner.vertex) == cycle.end())
        throw InputError("vertex " + std::to_string(corner.vertex) + " is not on " +
                         describe_face(corner.face));
    const auto deg = vertex_degree(patch, corner.vertex);
    const auto sides = face_size(patch, corner.face);
    return Rational(1, static_cast<long>(deg)) + Rational(1, static_cast<long>(sides)) -
           Rational(1, 2);
}

Rational face_chi(const TessellationPatch& patch, FaceId f) {
    if (!patch.face_complete(f))
        throw CompletenessError("chi undefined: incomplete face " + std::to_string(f));
    Rational chi = 0;
    for (const VertexId v : patch.face_cycle(f)) chi += curvature(patch, {v, f});
    return chi;
}

CurvatureScan curvature_scan(const TessellationPatch& patch) {
    CurvatureScan scan;
    for (const auto& [fid, cycle] : patch.faces()) {
        for (const VertexId v : cycle) {
            if (!patch.face_complete(fid) || !patch.vertex_complete(v)) {
                ++scan.corners_skipped;
                continue;
            }
            ++scan.corners_checked;
            if (curvature(patch, {v, fid}) > 0) scan.all_nonpositive = false;
        }
    }
    return scan;
}

} // namespace tessella
