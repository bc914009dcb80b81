#pragma once

#include <functional>

#include "wbeuler/config.hpp"
#include "wbeuler/field.hpp"
#include "wbeuler/physics.hpp"

namespace wbeuler {

/// Closed-form conserved solution U(x, t), used by exact-mode ghosts.
using ExactSolution = std::function<ConservedState(Point, double)>;

struct BoundaryData {
  /// Equilibrium cell averages on the whole halo (equilibrium mode).
  const Field* equilibrium = nullptr;
  /// Exact solution (exact mode).
  ExactSolution exact;
  /// Order of the Gauss projection used for exact-mode ghosts.
  int projection_order = 5;
};

/// Fill every ghost cell of `state` for time t. The x sides are filled over
/// interior rows first, then the y sides over full rows, so corners are set.
/// Throws ConfigError when a side needs data that `data` does not provide.
void apply_boundary(Field& state, const BoundarySpec& spec, const BoundaryData& data, double t);

}  // namespace wbeuler
