#pragma once

#include "tessella/errors.hpp"
#include "tessella/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace tessella {

using VertexId = std::uint32_t;
using FaceId = std::uint32_t;

/// An incidence pair (vertex, face) with the vertex on the face's cycle.
struct Corner {
    VertexId vertex;
    FaceId face;
};

/// One finding of validate_patch.
struct ValidationIssue {
    enum class Kind {
        Structural,     // malformed data (cycle too short, unknown id)
        EdgeFaceCount,  // axiom i: edge not on exactly two faces
        FaceIntersection, // axiom ii: two faces share too much
        Orientation,    // duplicated directed edge across cycles
        Degree,         // complete vertex of degree < 3
    };
    Kind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Result of scanning every corner with complete vertex and face.
struct CurvatureScan {
    bool all_nonpositive = true;
    std::size_t corners_checked = 0;
    std::size_t corners_skipped = 0; // corners touching the incomplete margin
};

/// Finite combinatorial window of a plane tessellation.
///
/// Faces are stored as oriented (counterclockwise) vertex cycles; edges and
/// all incidence structure are derived from them. Completeness is explicit:
/// a complete vertex has its full face fan in the window, a complete face is
/// fully specified by its cycle. Instances are immutable after build(); every
/// operation on them is a pure function.
class TessellationPatch {
public:
    using FaceMap = std::map<FaceId, std::vector<VertexId>>;

    /// Builds the derived incidence maps. Throws InputError for data that is
    /// not even representable (cycle shorter than 2, repeated vertex inside a
    /// cycle, completeness ids that do not occur in any face). Everything
    /// else, including axiom violations, is left for validate_patch.
    static TessellationPatch build(FaceMap faces,
                                   std::set<VertexId> complete_vertices,
                                   std::set<FaceId> complete_faces);

    const FaceMap& faces() const { return faces_; }
    const std::vector<VertexId>& face_cycle(FaceId f) const;
    bool has_face(FaceId f) const { return faces_.count(f) != 0; }
    bool has_vertex(VertexId v) const { return vertex_faces_.count(v) != 0; }

    const std::set<VertexId>& complete_vertices() const { return complete_vertices_; }
    const std::set<FaceId>& complete_faces() const { return complete_faces_; }
    bool vertex_complete(VertexId v) const { return complete_vertices_.count(v) != 0; }
    bool face_complete(FaceId f) const { return complete_faces_.count(f) != 0; }

    std::size_t face_count() const { return faces_.size(); }
    std::size_t vertex_count() const { return vertex_faces_.size(); }

    /// Adjacent vertices, ascending.
    const std::vector<VertexId>& neighbors(VertexId v) const;
    /// Faces whose cycle contains v, ascending.
    const std::vector<FaceId>& faces_at(VertexId v) const;
    /// Edge-neighbouring faces in cycle-edge order (present ones only).
    const std::vector<FaceId>& face_neighbors(FaceId f) const;
    /// The face whose cycle contains the directed edge from->to, if any.
    std::optional<FaceId> face_with_directed_edge(VertexId from, VertexId to) const;
    /// All undirected edges as (min,max) pairs, ascending.
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    bool has_edge(VertexId a, VertexId b) const;

    /// All vertices, ascending.
    std::vector<VertexId> vertices() const;

private:
    TessellationPatch() = default;

    FaceMap faces_;
    std::set<VertexId> complete_vertices_;
    std::set<FaceId> complete_faces_;

    std::map<VertexId, std::vector<VertexId>> vertex_neighbors_;
    std::map<VertexId, std::vector<FaceId>> vertex_faces_;
    std::map<FaceId, std::vector<FaceId>> face_neighbors_;
    std::map<std::pair<VertexId, VertexId>, FaceId> directed_edge_face_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

/// Checks the tessellation axioms restricted to complete entities plus the
/// structural sanity of the stored data. An empty report means the window is
/// a valid finite piece of a tessellation.
ValidationReport validate_patch(const TessellationPatch& patch);

/// Number of edges at v. Requires v complete ("degree undefined on boundary").
std::size_t vertex_degree(const TessellationPatch& patch, VertexId v);

/// Cycle length of f. Requires f complete.
std::size_t face_size(const TessellationPatch& patch, FaceId f);

/// kappa(v,f) = 1/|v| + 1/E_f - 1/2, exact. Requires the corner complete.
Rational curvature(const TessellationPatch& patch, const Corner& corner);

/// chi(f) = sum of kappa over the corners of f. Requires f and all its
/// vertices complete.
Rational face_chi(const TessellationPatch& patch, FaceId f);

/// Scans every corner whose vertex and face are both complete.
CurvatureScan curvature_scan(const TessellationPatch& patch);

inline bool is_nonpositively_curved(const TessellationPatch& patch) {
    return curvature_scan(patch).all_nonpositive;
}

} // namespace tessella
