#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "heis/cmc_solver.hpp"
#include "heis/errors.hpp"
#include "heis/io.hpp"
#include "heis/mesh.hpp"
#include "heis/numerics.hpp"

namespace heis {
namespace {

CurveRecord random_record(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> value(-1e3, 1e3);
  std::uniform_int_distribution<int> exponent(-300, 300);
  CurveRecord r;
  const std::size_t n = 1 + rng() % 50;
  for (std::size_t i = 0; i < n; ++i) {
    for (auto* col : {&r.s, &r.x, &r.t, &r.theta, &r.alpha, &r.k, &r.l}) {
      col->push_back(std::ldexp(value(rng), exponent(rng) / 100));
    }
  }
  r.set_meta("n", "2");
  r.set_meta("c", value(rng));
  return r;
}

TEST(Csv, RoundTripIsBitExact) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = random_record(rng);
    std::stringstream ss;
    write_csv(ss, r);
    const auto back = read_csv(ss);
    EXPECT_EQ(back.s, r.s);
    EXPECT_EQ(back.x, r.x);
    EXPECT_EQ(back.t, r.t);
    EXPECT_EQ(back.theta, r.theta);
    EXPECT_EQ(back.alpha, r.alpha);
    EXPECT_EQ(back.k, r.k);
    EXPECT_EQ(back.l, r.l);
    EXPECT_EQ(back.meta, r.meta);
  }
}

TEST(Csv, CylinderHasConstantColumns) {
  const auto cyl = cmc_generating_curve(CmcParams(GroupDims(1), 1.0, -0.5), Branch::both);
  const auto r = make_record(cyl);
  for (std::size_t i = 0; i < r.size(); ++i) {
    EXPECT_EQ(r.x[i], 1.0);
    EXPECT_EQ(r.alpha[i], 0.0);
    EXPECT_EQ(r.k[i], 1.0);
  }
}

TEST(Csv, TrimsAxisRows) {
  const auto pansu = cmc_generating_curve(CmcParams(GroupDims(1), 2.0, 0.0), Branch::both);
  const auto r = make_record(pansu);
  EXPECT_EQ(r.size(), pansu.curve.size() - 2);
  EXPECT_EQ(r.meta_value("trimmed_front"), "1");
  EXPECT_EQ(r.meta_value("trimmed_back"), "1");
}

TEST(Csv, MalformedInput) {
  std::istringstream missing("s,x,t,theta,alpha,k\n1,2,3,4,5,6\n");
  EXPECT_THROW(read_csv(missing), ParseError);
  std::istringstream cell("s,x,t,theta,alpha,k,l\n1,2,3,4,5,6,abc\n");
  EXPECT_THROW(read_csv(cell), ParseError);
  std::istringstream row("s,x,t,theta,alpha,k,l\n1,2,3,4,5,6\n");
  EXPECT_THROW(read_csv(row), ParseError);
  std::istringstream empty("");
  EXPECT_THROW(read_csv(empty), ParseError);
}

TEST(Json, RoundTrip) {
  std::mt19937_64 rng(11);
  const auto r = random_record(rng);
  std::stringstream ss;
  write_json(ss, r);
  const auto back = read_json(ss);
  EXPECT_EQ(back.s, r.s);
  EXPECT_EQ(back.l, r.l);
  EXPECT_EQ(back.meta_number("c"), r.meta_number("c"));
  std::istringstream bad("{\"samples\": [{\"s\": 1}]}");
  EXPECT_THROW(read_json(bad), ParseError);
  std::istringstream junk("not json");
  EXPECT_THROW(read_json(junk), ParseError);
}

TEST(Series, ReadsWithHeaderAndComments) {
  std::istringstream in("# alpha\ns,alpha\n0,1\n0.5,2\n");
  const auto [s, v] = read_series(in);
  EXPECT_EQ(s, (std::vector<double>{0.0, 0.5}));
  EXPECT_EQ(v, (std::vector<double>{1.0, 2.0}));
  std::istringstream bad("0,1\n0.5,x\n");
  EXPECT_THROW(read_series(bad), ParseError);
  std::istringstream spaced("s alpha\n0 1\n0.5\t2\n");
  EXPECT_EQ(read_series(spaced).second, (std::vector<double>{1.0, 2.0}));
  std::istringstream three("0,1,2\n");
  EXPECT_THROW(read_series(three), ParseError);
}

TEST(Mesh, CylinderTube) {
  const auto cyl = cmc_generating_curve(CmcParams(GroupDims(1), 1.0, -0.5), Branch::both);
  const auto m = revolve_mesh(cyl.curve, 4);
  EXPECT_EQ(m.vertices.size(), cyl.curve.size() * 4);
  EXPECT_EQ(m.faces.size(), (cyl.curve.size() - 1) * 4);
  for (const auto& v : m.vertices) EXPECT_NEAR(std::hypot(v[0], v[1]), 1.0, 1e-14);
  EXPECT_EQ(euler_characteristic(m), 0);
  EXPECT_THROW(revolve_mesh(cyl.curve, 2), DomainError);
  // Outward winding: the first quad's normal points away from the axis.
  const auto& f = m.faces.front();
  const auto& a = m.vertices[f[0]];
  const auto& b = m.vertices[f[1]];
  const auto& c = m.vertices[f[2]];
  const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  const double w[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
  const double nx = u[1] * w[2] - u[2] * w[1];
  const double ny = u[2] * w[0] - u[0] * w[2];
  EXPECT_GT(nx * a[0] + ny * a[1], 0.0);
}

TEST(Mesh, PansuIsClosedSphere) {
  GridSpec grid;
  grid.samples = 512;
  const auto pansu = cmc_generating_curve(CmcParams(GroupDims(1), 2.0, 0.0), Branch::both, grid);
  const auto m = revolve_mesh(pansu.curve, 64);
  EXPECT_EQ(m.vertices.size(), 510u * 64u + 2u);
  EXPECT_EQ(euler_characteristic(m), 2);
  EXPECT_TRUE(is_closed_oriented(m));
  std::ostringstream out;
  write_obj(out, m);
  const auto text = out.str();
  EXPECT_NE(text.find("\nv "), std::string::npos);
  EXPECT_NE(text.find("\nf "), std::string::npos);
}

TEST(Mesh, MinimalWaist) {
  const auto cat = minimal_generating_curve(GroupDims(1), 1.0, Branch::both);
  const auto m = revolve_mesh(cat.curve, 32);
  double rmin = 1e9;
  for (const auto& v : m.vertices) rmin = std::min(rmin, std::hypot(v[0], v[1]));
  EXPECT_NEAR(rmin, 1.0, 1e-6);
  EXPECT_EQ(euler_characteristic(m), 0);
}

}  // namespace
}  // namespace heis
