#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "heis/curve.hpp"
#include "heis/kernels.hpp"

namespace heis {

/// Surface of revolution of a horizontal generating curve in the
/// (x_n, y_n, t) slice: vertex (x cos(theta0 + theta), x sin(theta0 + theta), t)
/// for every sample and segment angle theta0. Samples on the axis collapse to
/// a single apex vertex; faces are quads, or triangles fanning around an apex.
struct RevolvedMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::vector<int>> faces;  // 0-based, counter-clockwise seen from outside
};

RevolvedMesh revolve_mesh(const GeneratingCurve& curve, int segments,
                          kernels::Exec exec = kernels::Exec::parallel);

// OBJ text with `v x y z` and 1-based `f i j k [l]` lines only.
void write_obj(std::ostream& out, const RevolvedMesh& mesh);

// V - E + F over the undirected edge set.
long euler_characteristic(const RevolvedMesh& mesh);

// True if every edge borders exactly two faces traversing it in opposite directions.
bool is_closed_oriented(const RevolvedMesh& mesh);

}  // namespace heis
