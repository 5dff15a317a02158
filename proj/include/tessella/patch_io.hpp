#pragma once

#include "tessella/patch.hpp"

#include <string>
#include <string_view>

namespace tessella {

// Patch text format (ASCII, newline-delimited, space-separated):
//
//   tess 1
//   face <fid>: <v0> <v1> ... <vk-1>
//   ...
//   complete_vertices: <id> <id> ... | all
//   complete_faces: <id> <id> ... | all
//
// Lines beginning with '#' are comments. Duplicate face ids and non-simple
// cycles are parse errors (with line numbers); axiom violations are not --
// they are surfaced by validate_patch.

TessellationPatch load_patch(std::string_view text);
std::string save_patch(const TessellationPatch& patch);

/// Structural equality: same face ids with cycles equal up to rotation, and
/// the same completeness sets.
bool patch_equal(const TessellationPatch& a, const TessellationPatch& b);

} // namespace tessella
