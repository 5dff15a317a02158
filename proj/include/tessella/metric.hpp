#pragma once

#include "tessella/patch.hpp"

#include <map>
#include <string>
#include <vector>

namespace tessella {

/// Finite face set whose union is a combinatorial disc. `boundary` is the
/// single simple closed vertex cycle of the union, oriented with the face
/// cycles (counterclockwise) and rotated to start at its smallest vertex id.
struct Polygon {
    const TessellationPatch* patch = nullptr;
    std::vector<FaceId> faces;      // ascending
    std::vector<VertexId> boundary; // simple cycle
    bool contains(FaceId f) const;
};

enum class Label { APlus, A, B };

std::string label_name(Label l);

/// Cyclic enumeration of a distance sphere A_k(f0) induced by walking the
/// boundary of B_{k-1}(f0).
struct SphereEnumeration {
    FaceId center;
    unsigned k = 0;
    std::vector<FaceId> faces; // cyclic order
};

/// Checks that the faces {f : dist(f,f0) <= r} are complete with complete
/// vertices; throws MarginError otherwise. Every ball operation below calls
/// this with the margin it needs, so finite-window effects can never corrupt
/// a result silently.
void require_ball_complete(const TessellationPatch& patch, FaceId f0, unsigned r);

/// BFS distances over edge-neighbouring faces from f0 (whole window).
std::map<FaceId, unsigned> face_distances(const TessellationPatch& patch, FaceId f0);

/// Length of the shortest face path between f and g. Throws InputError when
/// they are not connected in the window.
unsigned face_distance(const TessellationPatch& patch, FaceId f, FaceId g);

/// Faces of the combinatorial disc B_k(f0) (margin k+1), ascending.
std::vector<FaceId> ball_faces(const TessellationPatch& patch, FaceId f0, unsigned k);

/// B_k(f0) as a Polygon (margin k+1).
Polygon distance_ball(const TessellationPatch& patch, FaceId f0, unsigned k);

/// A_k(f0) = B_k \ B_{k-1}, ascending (margin k+1).
std::vector<FaceId> distance_sphere(const TessellationPatch& patch, FaceId f0, unsigned k);

/// Builds a Polygon from an explicit face set; throws PolygonError when the
/// union is not a disc (checked via the Euler count, edge-connectivity and a
/// single simple boundary cycle).
Polygon polygon_from_faces(const TessellationPatch& patch, std::vector<FaceId> faces);

/// Number of P-faces meeting v; v must lie on the boundary of P and be
/// complete.
std::size_t inner_degree(const Polygon& P, VertexId v);

/// |v| - inner_degree. Zero for a boundary vertex of a disc is impossible and
/// reported as an InconsistencyError.
std::size_t exterior_degree(const Polygon& P, VertexId v);

/// Smallest face size at v; needs every face at v complete.
std::size_t min_face_size_at(const TessellationPatch& patch, VertexId v);

/// a+ iff inner degree 1; a iff additionally-or N(v)=3 and inner degree <= 3;
/// b otherwise.
Label boundary_label(const Polygon& P, VertexId v);

/// Labels along the boundary cycle, same indexing as P.boundary.
std::vector<Label> label_sequence(const Polygon& P);

/// True iff every b-vertex on the boundary has only a+ boundary neighbours.
bool is_admissible(const Polygon& P);

/// B_k(P) = {f : dist(f,P) <= k} as a Polygon (margin k+1 around P).
Polygon k_neighborhood(const Polygon& P, unsigned k);

/// All faces g with dist(g,f0) <= radius on which the distance to f0 attains
/// a local maximum (margin radius+1). Empty on nonpositively curved patches.
std::vector<FaceId> cut_locus(const TessellationPatch& patch, FaceId f0, unsigned radius);

/// Cyclic enumeration of A_k(f0) by walking the boundary of B_{k-1}(f0);
/// throws EnumerationError when the enumeration invariants fail (possible on
/// positively curved input) -- never returns a silently wrong order.
SphereEnumeration enumerate_sphere(const TessellationPatch& patch, FaceId f0, unsigned k);

/// Returns a face of the enumeration with either exactly one boundary edge on
/// the previous ball, or sharing an edge with at most one cyclic neighbour.
/// Throws InconsistencyError when no such face exists.
FaceId check_lemma28(const SphereEnumeration& e, const TessellationPatch& patch, FaceId f0,
                     unsigned k);

/// True iff the boundary of B_k(f0) has even length, strictly alternating
/// a+/b labels, and every b-vertex has exterior degree 1 -- i.e. true means
/// the forbidden labeling occurs.
bool check_forbidden_alternation(const TessellationPatch& patch, FaceId f0, unsigned k);

struct GrowthRow {
    unsigned k;
    std::size_t ball;   // |B_k|
    std::size_t sphere; // |A_k|
    Rational mean_chi;  // exact
};

/// Rows for k = 0..kmax (margin kmax+1).
std::vector<GrowthRow> growth_report(const TessellationPatch& patch, FaceId f0, unsigned kmax);

/// Line-oriented TSV: k, |B_k|, |A_k|, mean_chi as "num/den" and, when
/// with_ratios is set, |B_{k+1}|/|B_k| as an exact rational.
std::string growth_tsv(const std::vector<GrowthRow>& rows, bool with_ratios = false);

} // namespace tessella
