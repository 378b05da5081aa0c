#pragma once

#include <string>

#include "dicrit/branch.hpp"

namespace dicrit {

/// Schematic DOT skeleton of the resolution dual graph: a chain through the
/// triple points T_1..T_g with the curvette arrows of F_0..F_{g+1}.
/// Intermediate divisor chains are not resolved.
std::string emit_dual_graph_dot(const CharLadder& l);

}  // namespace dicrit
