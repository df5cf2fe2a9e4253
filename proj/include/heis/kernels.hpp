#pragma once

#include <span>
#include <vector>

namespace heis {
class PhaseMap;
}

namespace heis::kernels {

// Serial reference path or the OpenMP-parallel path.
enum class Exec { serial, parallel };

/// Phases u with arclength(anchor, u) == s[i] for each target arclength.
///
/// serial: marches through the (increasing) targets, each solve warm-started
/// from the previous phase and integrating only the new cell.
/// parallel: every sample is solved independently from the anchor.
std::vector<double> invert_arclength(const PhaseMap& map, std::span<const double> s, Exec exec);

struct CellIntegrals {
  std::vector<double> k_ds;    // int k ds over each cell [u_i, u_{i+1}]
  std::vector<double> kx2_ds;  // int k x^2 ds over each cell
};

// Per-cell integrals between consecutive phases (size u.size() - 1).
CellIntegrals integrate_cells(const PhaseMap& map, std::span<const double> u, Exec exec);

// Vertices (x cos(theta0 + theta), x sin(theta0 + theta), t) on the (sample, segment) grid,
// row-major by sample, segment angles theta0 = 2 pi j / segments.
std::vector<double> revolve_vertices(std::span<const double> x, std::span<const double> t,
                                     std::span<const double> theta, int segments, Exec exec);

}  // namespace heis::kernels
