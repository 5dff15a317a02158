#pragma once

#include "tessella/patch.hpp"

#include <string>

namespace tessella {

/// SVG drawing of the patch via a barycentric (Tutte) embedding: the outer
/// boundary cycle is placed on a circle, interior vertices at the average of
/// their neighbours. Faces are coloured by the sign of chi(f); faces touching
/// the incomplete margin are left uncoloured. Deterministic for fixed input.
///
/// Throws InputError on an empty patch and PolygonError when the window is
/// not a disc.
std::string render_svg(const TessellationPatch& patch);

} // namespace tessella
