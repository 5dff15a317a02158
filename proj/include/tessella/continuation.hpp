#pragma once

#include "tessella/elliptic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tessella {

/// One forced zero with the equation that produced it.
struct TraceEvent {
    enum class Rule {
        OuterBoundary,  // vertex already lies on the next boundary / outside
        SingleUnknown,  // eigenfunction equation at `equation_vertex` with a
                        // single unknown, eliminated via a(eq, vertex) != 0
        BoundarySweep,  // equation at the a+ vertex between two known zeros
    };
    VertexId vertex;
    Rule rule;
    VertexId equation_vertex; // equals `vertex` for OuterBoundary
};

struct LayerTrace {
    unsigned k;
    std::vector<TraceEvent> events;
    bool complete = false;
    std::vector<VertexId> stuck; // boundary vertices that could not be forced
};

struct PropagationTrace {
    bool success = false;
    unsigned kmax = 0;
    std::vector<LayerTrace> layers; // outside-in: k = kmax .. 0
    std::string message;
};

/// Executable rendition of the vanishing propagation: assume the
/// eigenfunction equation together with u = 0 on the boundary of B_{kmax+1}
/// and everything outside it, then force u = 0 layer by layer on each
/// boundary cycle, outside-in. With u symbolic (the default) the derivation
/// is generic in the operator: every elimination uses one equation whose only
/// unknown is the target vertex, so only ellipticity (nonzero coefficients on
/// edges) is consumed. When concrete values are supplied they are checked at
/// every step instead.
///
/// Needs completeness margin kmax+2 around f0. In concrete mode the caller
/// must pick kmax at least the support radius + 1; there is no constructive
/// bound.
PropagationTrace unique_continuation_trace(const EllipticOperator& op, FaceId f0, unsigned kmax,
                                           const VertexFunction* concrete_u = nullptr);

} // namespace tessella
