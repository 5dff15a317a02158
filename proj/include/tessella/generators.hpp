#pragma once

#include "tessella/patch.hpp"

#include <string>

namespace tessella {

struct GeneratedPatch {
    TessellationPatch patch;
    FaceId base; // always 0 under the canonical id assignment
};

/// Grows the regular {p,q} tessellation disc by vertex completion: start from
/// a central p-gon and complete every boundary vertex to degree q, layer by
/// layer, until the combinatorial face ball B_radius(base) is present with all
/// of its faces and their vertices complete. The outermost ring stays
/// incomplete. Ids are assigned breadth-first from the base face, so equal
/// arguments give byte-identical saved patches and the radius-r patch is an
/// id-preserving prefix of the radius-(r+1) patch.
///
/// Requires p,q >= 3 and 1/p + 1/q <= 1/2; spherical parameters are rejected.
GeneratedPatch generate_regular(unsigned p, unsigned q, unsigned radius);

/// Trihexagonal (3,6,3,6) patch: every complete vertex has degree 4 with the
/// cyclic face pattern triangle/hexagon/triangle/hexagon; the base face is a
/// hexagon and B_radius(base) is complete. Requires radius >= 1.
GeneratedPatch generate_kagome(unsigned radius);

/// One-stop construction used by the CLI and the python module.
struct GenSpec {
    enum class Kind { Regular, Kagome, FromFile };
    Kind kind = Kind::Regular;
    unsigned p = 4, q = 4;
    unsigned radius = 2;
    std::string path; // FromFile
};

GeneratedPatch generate(const GenSpec& spec);

} // namespace tessella
