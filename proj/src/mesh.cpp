#include "heis/mesh.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <utility>

#include "heis/errors.hpp"
#include "heis/io.hpp"

namespace heis {

RevolvedMesh revolve_mesh(const GeneratingCurve& curve, int segments, kernels::Exec exec) {
  if (segments < 3) throw DomainError("a revolved mesh needs at least 3 segments");
  if (!curve.has_theta()) throw DomainError("revolve_mesh needs the rotation angle theta");
  const auto x = curve.x();
  const auto t = curve.t();
  const std::size_t rows = curve.size();
  const auto grid = kernels::revolve_vertices(x, t, curve.theta(), segments, exec);

  RevolvedMesh mesh;
  // index[i][j]: vertex of sample i, segment j (all j share one vertex on the axis).
  std::vector<std::vector<int>> index(rows, std::vector<int>(segments));
  for (std::size_t i = 0; i < rows; ++i) {
    if (x[i] == 0.0) {
      const int apex = static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back({0.0, 0.0, t[i]});
      for (int j = 0; j < segments; ++j) index[i][j] = apex;
      continue;
    }
    for (int j = 0; j < segments; ++j) {
      const std::size_t g = 3 * (i * static_cast<std::size_t>(segments) + j);
      index[i][j] = static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back({grid[g], grid[g + 1], grid[g + 2]});
    }
  }

  // The normal of (i,j) -> (i+1,j) -> (i+1,j+1) is d/ds x d/dtheta0, whose
  // radial part is -x t'. Flip the traversal when that points inward on average.
  double radial = 0.0;
  for (std::size_t i = 0; i + 1 < rows; ++i) radial += (x[i] + x[i + 1]) * (t[i] - t[i + 1]);
  const bool forward = radial >= 0.0;

  for (std::size_t i = 0; i + 1 < rows; ++i) {
    const bool apex0 = x[i] == 0.0;
    const bool apex1 = x[i + 1] == 0.0;
    if (apex0 && apex1) continue;
    for (int j = 0; j < segments; ++j) {
      const int jn = (j + 1) % segments;
      std::vector<int> face;
      if (apex0) {
        face = {index[i][j], index[i + 1][j], index[i + 1][jn]};
      } else if (apex1) {
        face = {index[i][j], index[i + 1][j], index[i][jn]};
      } else {
        face = {index[i][j], index[i + 1][j], index[i + 1][jn], index[i][jn]};
      }
      if (!forward) std::reverse(face.begin(), face.end());
      mesh.faces.push_back(std::move(face));
    }
  }
  return mesh;
}

void write_obj(std::ostream& out, const RevolvedMesh& mesh) {
  out << "# " << kToolVersion << '\n';
  for (const auto& v : mesh.vertices) {
    out << "v " << format_number(v[0]) << ' ' << format_number(v[1]) << ' '
        << format_number(v[2]) << '\n';
  }
  for (const auto& f : mesh.faces) {
    out << 'f';
    for (int idx : f) out << ' ' << idx + 1;
    out << '\n';
  }
  if (!out) throw IoError("failed to write OBJ output");
}

long euler_characteristic(const RevolvedMesh& mesh) {
  std::set<std::pair<int, int>> edges;
  for (const auto& f : mesh.faces) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      const int a = f[k];
      const int b = f[(k + 1) % f.size()];
      edges.emplace(std::min(a, b), std::max(a, b));
    }
  }
  return static_cast<long>(mesh.vertices.size()) - static_cast<long>(edges.size()) +
         static_cast<long>(mesh.faces.size());
}

bool is_closed_oriented(const RevolvedMesh& mesh) {
  std::map<std::pair<int, int>, int> directed;
  for (const auto& f : mesh.faces) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      ++directed[{f[k], f[(k + 1) % f.size()]}];
    }
  }
  for (const auto& [edge, count] : directed) {
    if (count != 1) return false;
    const auto twin = directed.find({edge.second, edge.first});
    if (twin == directed.end() || twin->second != 1) return false;
  }
  return true;
}

}  // namespace heis
