#pragma once

#include <functional>
#include <span>

#include "wbeuler/equilibrium.hpp"
#include "wbeuler/physics.hpp"
#include "wbeuler/wellbalance.hpp"

namespace wbeuler {

/// Second-order well-balanced average of (y / alpha) d(beta) along [a, b]:
/// (y(a)/alpha(a) + y(b)/alpha(b)) / 2 * (beta(b) - beta(a)) / |b - a|.
/// Throws NonPhysicalState if alpha vanishes at an endpoint.
double wb_rule_segment(const ScalarFunction& y, const EquilibriumPair& pair, Point a, Point b);

/// Richardson-extrapolated composite rule on 2^level equal subsegments, of
/// order 2 + 2 level. Level 0 is wb_rule_segment.
double romberg_wb(const ScalarFunction& y, const EquilibriumPair& pair, Point a, Point b, int level);

/// Kernel on precomputed node values: ratio[n] = y/alpha and beta[n] at the
/// 2^level + 1 equispaced nodes of a segment of the given length.
double romberg_wb_nodes(std::span<const double> ratio, std::span<const double> beta, double length,
                        int level);

/// (0, Q^{rho v}, Q^E) for interior cell i of a 1D scheme.
StateVector source_cell_1d(const WBPointValues& values, int i);

/// (0, Q_x, Q_y, Q^E) for interior cell (i, j) of a 2D scheme: per direction a
/// face-Gauss weighted sum of Romberg rules along segments joining opposite
/// face nodes.
StateVector source_cell_2d(const WBPointValues& values, int i, int j);

StateVector source_cell(const WBPointValues& values, int i, int j);

}  // namespace wbeuler
