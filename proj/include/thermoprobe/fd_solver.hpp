#pragma once

/**
 * Independent finite-difference check for the two-material stationary
 * problem. Shares no code with the closed-form path in rod_model: the
 * problem is discretized conservatively on a node-centered grid and solved
 * with a direct tridiagonal sweep. Because the exact solution is piecewise
 * linear and the face conductivities are series (harmonic-mean) averages,
 * the scheme reproduces it to solver roundoff, which makes any disagreement
 * a genuine defect on one of the two paths.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "thermoprobe/rod_model.hpp"

namespace thermoprobe {

struct DiscreteSolution {
    std::vector<double> node_positions;     ///< strictly increasing, 0 .. L
    std::vector<double> node_temperatures;  ///< one per node
    double numeric_flux_at_L = 0.0;         ///< -kappa_B * du/dx at x = L
    std::size_t node_count = 0;
};

/// Solves on a grid with n_cells >= 4 intervals, uniform within each
/// material section and with a node placed exactly at the interface.
DiscreteSolution fd_solve(const RodConfig& config, double kappa_A, std::size_t n_cells);

/// Solves on a caller-supplied grid (strictly increasing, spanning [0, L]).
/// The interface need not coincide with a node: faces whose interval
/// straddles it get the length-weighted harmonic mean of the two
/// conductivities, which models the sub-cell material change exactly.
DiscreteSolution fd_solve_on_grid(const RodConfig& config, double kappa_A,
                                  std::span<const double> node_positions);

}  // namespace thermoprobe
