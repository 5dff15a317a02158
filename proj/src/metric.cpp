#include "tessella/metric.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace tessella {

namespace {

std::map<FaceId, unsigned> multi_source_distances(const TessellationPatch& patch,
                                                  const std::vector<FaceId>& sources) {
    std::map<FaceId, unsigned> dist;
    std::deque<FaceId> queue;
    for (const FaceId f : sources) {
        if (!patch.has_face(f)) throw InputError("unknown face " + std::to_string(f));
        if (dist.emplace(f, 0).second) queue.push_back(f);
    }
    while (!queue.empty()) {
        const FaceId f = queue.front();
        queue.pop_front();
        const unsigned d = dist.at(f);
        for (const FaceId g : patch.face_neighbors(f))
            if (dist.emplace(g, d + 1).second) queue.push_back(g);
    }
    return dist;
}

void require_complete_through(const TessellationPatch& patch,
                              const std::map<FaceId, unsigned>& dist, unsigned r,
                              const std::string& what) {
    for (const auto& [f, d] : dist) {
        if (d > r) continue;
        if (!patch.face_complete(f))
            throw MarginError(what + ": face " + std::to_string(f) + " at distance " +
                              std::to_string(d) + " is incomplete (margin " + std::to_string(r) +
                              ")");
        for (const VertexId v : patch.face_cycle(f))
            if (!patch.vertex_complete(v))
                throw MarginError(what + ": vertex " + std::to_string(v) + " of face " +
                                  std::to_string(f) + " at distance " + std::to_string(d) +
                                  " is incomplete (margin " + std::to_string(r) + ")");
    }
}

std::vector<FaceId> faces_within(const std::map<FaceId, unsigned>& dist, unsigned k) {
    std::vector<FaceId> out;
    for (const auto& [f, d] : dist)
        if (d <= k) out.push_back(f);
    return out;
}

/// Rotate a cycle so it starts at its smallest element.
void canonical_rotate(std::vector<VertexId>& cycle) {
    if (cycle.empty()) return;
    const auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
}

} // namespace

bool Polygon::contains(FaceId f) const {
    return std::binary_search(faces.begin(), faces.end(), f);
}

std::string label_name(Label l) {
    switch (l) {
    case Label::APlus: return "a+";
    case Label::A: return "a";
    case Label::B: return "b";
    }
    return "?";
}

void require_ball_complete(const TessellationPatch& patch, FaceId f0, unsigned r) {
    const auto dist = multi_source_distances(patch, {f0});
    require_complete_through(patch, dist, r, "ball around " + std::to_string(f0));
}

std::map<FaceId, unsigned> face_distances(const TessellationPatch& patch, FaceId f0) {
    return multi_source_distances(patch, {f0});
}

unsigned face_distance(const TessellationPatch& patch, FaceId f, FaceId g) {
    if (!patch.has_face(g)) throw InputError("unknown face " + std::to_string(g));
    const auto dist = multi_source_distances(patch, {f});
    const auto it = dist.find(g);
    if (it == dist.end())
        throw InputError("faces " + std::to_string(f) + " and " + std::to_string(g) +
                         " are not connected");
    return it->second;
}

std::vector<FaceId> ball_faces(const TessellationPatch& patch, FaceId f0, unsigned k) {
    const auto dist = multi_source_distances(patch, {f0});
    require_complete_through(patch, dist, k + 1, "ball around " + std::to_string(f0));
    return faces_within(dist, k);
}

Polygon distance_ball(const TessellationPatch& patch, FaceId f0, unsigned k) {
    return polygon_from_faces(patch, ball_faces(patch, f0, k));
}

std::vector<FaceId> distance_sphere(const TessellationPatch& patch, FaceId f0, unsigned k) {
    const auto dist = multi_source_distances(patch, {f0});
    require_complete_through(patch, dist, k + 1, "sphere around " + std::to_string(f0));
    std::vector<FaceId> out;
    for (const auto& [f, d] : dist)
        if (d == k) out.push_back(f);
    return out;
}

Polygon polygon_from_faces(const TessellationPatch& patch, std::vector<FaceId> faces) {
    if (faces.empty()) throw PolygonError("empty face set");
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (const FaceId f : faces)
        if (!patch.has_face(f)) throw InputError("unknown face " + std::to_string(f));

    const std::set<FaceId> in_set(faces.begin(), faces.end());

    // edge-connectivity over shared edges
    std::set<FaceId> seen{faces.front()};
    std::deque<FaceId> queue{faces.front()};
    while (!queue.empty()) {
        const FaceId f = queue.front();
        queue.pop_front();
        for (const FaceId g : patch.face_neighbors(f))
            if (in_set.count(g) && seen.insert(g).second) queue.push_back(g);
    }
    if (seen.size() != faces.size()) throw PolygonError("face set is not edge-connected");

    // Euler count of the subcomplex
    std::set<VertexId> verts;
    std::set<std::pair<VertexId, VertexId>> edges;
    for (const FaceId f : faces) {
        const auto& cycle = patch.face_cycle(f);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            verts.insert(cycle[i]);
            edges.insert(std::minmax(cycle[i], cycle[(i + 1) % cycle.size()]));
        }
    }
    const long euler = static_cast<long>(verts.size()) - static_cast<long>(edges.size()) +
                       static_cast<long>(faces.size());
    if (euler != 1)
        throw PolygonError("union is not a disc: V - E + F = " + std::to_string(euler));

    // boundary: directed edges whose undirected edge lies in exactly one face
    // of the set, directed as in that face
    std::map<std::pair<VertexId, VertexId>, unsigned> edge_count;
    for (const FaceId f : faces) {
        const auto& cycle = patch.face_cycle(f);
        for (std::size_t i = 0; i < cycle.size(); ++i)
            ++edge_count[std::minmax(cycle[i], cycle[(i + 1) % cycle.size()])];
    }
    std::map<VertexId, VertexId> succ;
    std::size_t boundary_edges = 0;
    for (const FaceId f : faces) {
        const auto& cycle = patch.face_cycle(f);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const VertexId a = cycle[i], b = cycle[(i + 1) % cycle.size()];
            if (edge_count.at(std::minmax(a, b)) != 1) continue;
            ++boundary_edges;
            if (!succ.emplace(a, b).second)
                throw PolygonError("boundary is pinched at vertex " + std::to_string(a));
        }
    }
    if (boundary_edges == 0) throw PolygonError("face set has no boundary");

    std::vector<VertexId> boundary;
    const VertexId start = succ.begin()->first;
    VertexId v = start;
    do {
        boundary.push_back(v);
        const auto it = succ.find(v);
        if (it == succ.end()) throw PolygonError("boundary walk broke at " + std::to_string(v));
        v = it->second;
    } while (v != start && boundary.size() <= boundary_edges);
    if (boundary.size() != boundary_edges)
        throw PolygonError("boundary is not a single cycle");

    canonical_rotate(boundary);
    Polygon p;
    p.patch = &patch;
    p.faces = std::move(faces);
    p.boundary = std::move(boundary);
    return p;
}

std::size_t inner_degree(const Polygon& P, VertexId v) {
    if (std::find(P.boundary.begin(), P.boundary.end(), v) == P.boundary.end())
        throw InputError("vertex " + std::to_string(v) + " is not on the polygon boundary");
    if (!P.patch->vertex_complete(v))
        throw CompletenessError("inner degree needs complete vertex " + std::to_string(v));
    std::size_t n = 0;
    for (const FaceId f : P.patch->faces_at(v)) n += P.contains(f);
    return n;
}

std::size_t exterior_degree(const Polygon& P, VertexId v) {
    const std::size_t inner = inner_degree(P, v);
    const std::size_t deg = vertex_degree(*P.patch, v);
    if (deg == inner)
        throw InconsistencyError("boundary vertex " + std::to_string(v) +
                                 " has exterior degree 0");
    return deg - inner;
}

std::size_t min_face_size_at(const TessellationPatch& patch, VertexId v) {
    if (!patch.vertex_complete(v))
        throw CompletenessError("N(v) needs complete vertex " + std::to_string(v));
    std::size_t best = 0;
    for (const FaceId f : patch.faces_at(v)) {
        if (!patch.face_complete(f))
            throw CompletenessError("N(v) at " + std::to_string(v) + " needs complete face " +
                                    std::to_string(f));
        const std::size_t s = patch.face_cycle(f).size();
        if (best == 0 || s < best) best = s;
    }
    return best;
}

Label boundary_label(const Polygon& P, VertexId v) {
    const std::size_t inner = inner_degree(P, v);
    if (inner == 1) return Label::APlus;
    if (min_face_size_at(*P.patch, v) == 3 && inner <= 3) return Label::A;
    return Label::B;
}

std::vector<Label> label_sequence(const Polygon& P) {
    std::vector<Label> out;
    out.reserve(P.boundary.size());
    for (const VertexId v : P.boundary) out.push_back(boundary_label(P, v));
    return out;
}

bool is_admissible(const Polygon& P) {
    const auto labels = label_sequence(P);
    const std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (labels[i] != Label::B) continue;
        if (labels[(i + 1) % n] != Label::APlus || labels[(i + n - 1) % n] != Label::APlus)
            return false;
    }
    return true;
}

Polygon k_neighborhood(const Polygon& P, unsigned k) {
    const auto dist = multi_source_distances(*P.patch, P.faces);
    require_complete_through(*P.patch, dist, k + 1, "neighborhood of polygon");
    return polygon_from_faces(*P.patch, faces_within(dist, k));
}

std::vector<FaceId> cut_locus(const TessellationPatch& patch, FaceId f0, unsigned radius) {
    const auto dist = multi_source_distances(patch, {f0});
    require_complete_through(patch, dist, radius + 1, "cut locus around " + std::to_string(f0));
    std::vector<FaceId> out;
    for (const auto& [g, d] : dist) {
        if (d > radius) continue;
        bool local_max = true;
        for (const FaceId f : patch.face_neighbors(g))
            if (dist.at(f) > d) {
                local_max = false;
                break;
            }
        if (local_max) out.push_back(g);
    }
    return out;
}

SphereEnumeration enumerate_sphere(const TessellationPatch& patch, FaceId f0, unsigned k) {
    SphereEnumeration e;
    e.center = f0;
    e.k = k;
    if (k == 0) {
        require_ball_complete(patch, f0, 1);
        e.faces = {f0};
        return e;
    }

    const auto dist = multi_source_distances(patch, {f0});
    require_complete_through(patch, dist, k + 1, "sphere around " + std::to_string(f0));
    const Polygon inner = polygon_from_faces(patch, faces_within(dist, k - 1));
    const std::set<FaceId> inner_set(inner.faces.begin(), inner.faces.end());

    auto at_distance = [&](FaceId f, unsigned d) {
        const auto it = dist.find(f);
        return it != dist.end() && it->second == d;
    };

    // Walk the fan at every boundary vertex, rotating from the inside face
    // across the exterior ones; collect the sphere faces met on the way.
    std::vector<FaceId> order;
    const std::size_t n = inner.boundary.size();
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId vprev = inner.boundary[(i + n - 1) % n];
        const VertexId v = inner.boundary[i];
        auto face_of = patch.face_with_directed_edge(vprev, v);
        if (!face_of || !inner_set.count(*face_of))
            throw EnumerationError("boundary edge without inner face");
        FaceId f = *face_of;
        bool closed = false;
        for (std::size_t guard = 0; guard <= patch.faces_at(v).size(); ++guard) {
            // previous vertex of v on the cycle of f, then rotate across that edge
            const auto& cycle = patch.face_cycle(f);
            const auto pos = std::find(cycle.begin(), cycle.end(), v);
            if (pos == cycle.end()) throw EnumerationError("fan walk left the vertex");
            const VertexId before =
                cycle[(static_cast<std::size_t>(pos - cycle.begin()) + cycle.size() - 1) %
                      cycle.size()];
            const auto next = patch.face_with_directed_edge(v, before);
            if (!next) throw EnumerationError("fan at vertex " + std::to_string(v) +
                                              " is not closed in the window");
            f = *next;
            if (inner_set.count(f)) {
                closed = true;
                break; // reached the inside again
            }
            if (at_distance(f, k) && (order.empty() || order.back() != f)) order.push_back(f);
        }
        if (!closed)
            throw EnumerationError("fan walk at vertex " + std::to_string(v) +
                                   " never returned to the ball");
    }
    while (order.size() > 1 && order.front() == order.back()) order.pop_back();

    // the walk must produce each sphere face exactly once
    std::vector<FaceId> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw EnumerationError("enumeration inconsistent: a face recurs");
    std::vector<FaceId> sphere;
    for (const auto& [f, d] : dist)
        if (d == k) sphere.push_back(f);
    if (sorted != sphere)
        throw EnumerationError("enumeration inconsistent: walk missed sphere faces");

    // precisely cyclically-subsequent faces intersect, and each such
    // intersection contains a vertex of the inner boundary
    const std::set<VertexId> inner_bd(inner.boundary.begin(), inner.boundary.end());
    const std::size_t m = order.size();
    if (m > 1) {
        std::vector<std::set<VertexId>> vsets(m);
        for (std::size_t i = 0; i < m; ++i) {
            const auto& c = patch.face_cycle(order[i]);
            vsets[i].insert(c.begin(), c.end());
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                std::vector<VertexId> common;
                std::set_intersection(vsets[i].begin(), vsets[i].end(), vsets[j].begin(),
                                      vsets[j].end(), std::back_inserter(common));
                const bool subsequent = (j == i + 1) || (i == 0 && j == m - 1);
                if (subsequent && m > 2) {
                    if (common.empty())
                        throw EnumerationError("subsequent sphere faces do not intersect");
                    bool has_inner = false;
                    for (const VertexId v : common) has_inner |= inner_bd.count(v) != 0;
                    if (!has_inner)
                        throw EnumerationError(
                            "subsequent intersection misses the inner boundary");
                } else if (!subsequent && !common.empty()) {
                    throw EnumerationError("non-subsequent sphere faces intersect");
                }
            }
    }

    e.faces = std::move(order);
    return e;
}

namespace {

std::set<std::pair<VertexId, VertexId>> boundary_edge_set(const Polygon& P) {
    std::set<std::pair<VertexId, VertexId>> out;
    const std::size_t n = P.boundary.size();
    for (std::size_t i = 0; i < n; ++i)
        out.insert(std::minmax(P.boundary[i], P.boundary[(i + 1) % n]));
    return out;
}

std::size_t shared_edge_count(const TessellationPatch& patch, FaceId f,
                              const std::set<std::pair<VertexId, VertexId>>& edges) {
    const auto& cycle = patch.face_cycle(f);
    std::size_t n = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        n += edges.count(std::minmax(cycle[i], cycle[(i + 1) % cycle.size()]));
    return n;
}

bool faces_share_edge(const TessellationPatch& patch, FaceId f, FaceId g) {
    for (const FaceId h : patch.face_neighbors(f))
        if (h == g) return true;
    return false;
}

} // namespace

FaceId check_lemma28(const SphereEnumeration& e, const TessellationPatch& patch, FaceId f0,
                     unsigned k) {
    if (e.center != f0 || e.k != k) throw InputError("enumeration does not match (f0, k)");
    if (k == 0) return e.faces.at(0);
    const Polygon inner = distance_ball(patch, f0, k - 1);
    const auto inner_edges = boundary_edge_set(inner);
    const std::size_t m = e.faces.size();
    for (std::size_t j = 0; j < m; ++j) {
        const FaceId f = e.faces[j];
        if (shared_edge_count(patch, f, inner_edges) == 1) return f;
        if (m == 1) return f;
        unsigned shared = 0;
        shared += faces_share_edge(patch, f, e.faces[(j + 1) % m]) ? 1 : 0;
        shared += faces_share_edge(patch, f, e.faces[(j + m - 1) % m]) ? 1 : 0;
        if (shared <= 1) return f;
    }
    throw InconsistencyError("no face satisfies the sphere-splitting lemma on A_" +
                             std::to_string(k));
}

bool check_forbidden_alternation(const TessellationPatch& patch, FaceId f0, unsigned k) {
    const Polygon ball = distance_ball(patch, f0, k);
    const auto labels = label_sequence(ball);
    const std::size_t l = labels.size();
    if (l % 2 != 0) return false;
    for (std::size_t phase = 0; phase < 2; ++phase) {
        bool alternating = true;
        for (std::size_t i = 0; i < l && alternating; ++i) {
            const Label want = (i % 2 == phase) ? Label::APlus : Label::B;
            alternating = labels[i] == want;
        }
        if (!alternating) continue;
        bool exterior_one = true;
        for (std::size_t i = 0; i < l && exterior_one; ++i)
            if (labels[i] == Label::B)
                exterior_one = exterior_degree(ball, ball.boundary[i]) == 1;
        if (exterior_one) return true;
    }
    return false;
}

std::vector<GrowthRow> growth_report(const TessellationPatch& patch, FaceId f0, unsigned kmax) {
    const auto dist = multi_source_distances(patch, {f0});
    require_complete_through(patch, dist, kmax + 1, "growth around " + std::to_string(f0));

    std::vector<GrowthRow> rows;
    for (unsigned k = 0; k <= kmax; ++k) {
        GrowthRow row{k, 0, 0, Rational(0)};
        Rational chi_sum = 0;
        for (const auto& [f, d] : dist) {
            if (d > k) continue;
            ++row.ball;
            if (d == k) ++row.sphere;
            chi_sum += face_chi(patch, f);
        }
        row.mean_chi = chi_sum / Rational(static_cast<long>(row.ball));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string growth_tsv(const std::vector<GrowthRow>& rows, bool with_ratios) {
    std::ostringstream out;
    out << "# k\tball\tsphere\tmean_chi";
    if (with_ratios) out << "\tratio";
    out << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        out << r.k << '\t' << r.ball << '\t' << r.sphere << '\t' << fraction_string(r.mean_chi);
        if (with_ratios) {
            if (i + 1 < rows.size())
                out << '\t'
                    << fraction_string(Rational(static_cast<long>(rows[i + 1].ball),
                                                static_cast<long>(r.ball)));
            else
                out << "\t-";
        }
        out << '\n';
    }
    return out.str();
}

} // namespace tessella
