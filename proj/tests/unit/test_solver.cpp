#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "landau/core/errors.hpp"
#include "landau/norms/norms.hpp"
#include "landau/solver/checkpoint.hpp"
#include "landau/solver/solver.hpp"

using namespace landau;

namespace {

SimConfig small(double t_end = 0.1) {
  SimConfig c;
  c.grid.nx = 8;
  c.grid.nv = 16;
  c.grid.spatial_dims = 1;
  c.t_end = t_end;
  c.dt = 0.02;
  return c;
}

double rel_diff(const PhaseField& a, const PhaseField& b) { return l2_norm(a.combined(b, -1.0)) / l2_norm(b); }

}  // namespace

TEST_CASE("zero data stays zero") {
  SimConfig c = small();
  c.eps0 = 0.0;
  const SimState s = Solver(c).run({});
  CHECK(l2_norm(s.f) == 0.0);
  CHECK(s.diagnostics.back().l1m == 0.0);
}

TEST_CASE("initial data is normalised to eps0") {
  for (const char* kind : {"cos_bump", "two_mode", "null_space"}) {
    SimConfig c = small();
    c.profile.kind = kind;
    const SimState s = Solver(c).init();
    CHECK(l1m_l2v_norm(s.f) == doctest::Approx(c.eps0).epsilon(1e-10));
  }
}

TEST_CASE("transport alone is an isometry and reversible") {
  SimConfig c = small();
  c.collision = false;
  Solver solver(c);
  const SimState s0 = solver.init();
  PhaseField f = s0.f;
  solver.transport(f, 0.37);
  CHECK(std::abs(l2_norm(f) - l2_norm(s0.f)) <= 1e-12 * l2_norm(s0.f));
  CHECK(rel_diff(f, s0.f) > 1e-3);
  solver.transport(f, -0.37);
  CHECK(rel_diff(f, s0.f) <= 1e-12);
}

TEST_CASE("transport shifts a velocity-independent mode exactly") {
  // cos(x1) g(v) -> cos(x1 - v1 t) g(v)
  SimConfig c = small();
  c.collision = false;
  Solver solver(c);
  PhaseField f = sample(c.grid, [](const double* x, const double* v) {
    return cplx(std::cos(x[0]) * std::exp(-0.5 * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2])), 0.0);
  });
  solver.transport(f, 0.5);
  const PhaseField ref = sample(c.grid, [](const double* x, const double* v) {
    return cplx(std::cos(x[0] - 0.5 * v[0]) * std::exp(-0.5 * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2])), 0.0);
  });
  CHECK(rel_diff(f, ref) <= 1e-12);
}

TEST_CASE("null-space data is nearly stationary under collisions") {
  SimConfig c = small(0.1);
  c.grid.vmax = 10.0;
  c.grid.nv = 32;
  c.transport = false;
  c.eps0 = 1e-8;
  c.profile.kind = "null_space";
  Solver solver(c);
  // (a + b.v + c|v|^2) sqrt(mu) is in the kernel of L; the quadratic part is O(eps0^2).
  const PhaseField f0 = sample(c.grid, [](const double*, const double* v) {
    const double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    return cplx(1e-9 * std::exp(-0.25 * r2) * (1.0 + v[0] + r2), 0.0);
  });
  PhaseField f = f0;
  solver.collide(f, 0.05);
  MESSAGE("null-space drift " << rel_diff(f, f0));
  CHECK(rel_diff(f, f0) <= 1e-6);
}

TEST_CASE("conservation on a short run") {
  SimConfig c = small(0.1);
  const SimState s = Solver(c).run({});
  const ConservationDrift d = conservation_drift(s.diagnostics.front(), s.diagnostics.back());
  MESSAGE("drift mass " << d.mass << " momentum " << d.momentum << " energy " << d.energy);
  CHECK(d.max() <= 1e-6);
  CHECK(s.diagnostics.back().l2 < s.diagnostics.front().l2);
}

TEST_CASE("observer cadence and step snapping") {
  SimConfig c = small(0.1);
  c.dt = 0.03;
  c.observe_times = {0.025, 0.05, 0.1};
  std::vector<double> seen;
  const SimState s = Solver(c).run([&](const SimState& st) { seen.push_back(st.t); });
  REQUIRE(seen.size() == 4);
  CHECK(seen[0] == 0.0);
  CHECK(seen[1] == 0.025);
  CHECK(seen[2] == 0.05);
  CHECK(seen[3] == 0.1);
  CHECK(s.t == 0.1);
  for (std::size_t i = 1; i < s.diagnostics.size(); ++i)
    CHECK(s.diagnostics[i].t - s.diagnostics[i - 1].t <= 0.03 + 1e-15);
}

TEST_CASE("default observation times") {
  SimConfig c = small(1.0);
  const std::vector<double> t = c.resolved_observe_times();
  REQUIRE(t.size() == 16);
  CHECK(t.front() == doctest::Approx(0.1));
  CHECK(t.back() == 1.0);
}

TEST_CASE("RKC stage count covers the stiff spectrum") {
  Solver solver(small());
  const double rho = solver.stiff_radius();
  CHECK(rho > 0.0);
  int prev = 0;
  for (double dt : {1e-4, 1e-3, 0.01, 0.02, 0.05}) {
    const int s = solver.rkc_stages(dt);
    CHECK(s >= 2);
    CHECK(s >= prev);
    // beta(s) is about 0.35 s^2 for the strongly damped scheme.
    CHECK(0.36 * s * s >= 1.2 * dt * rho);
    if (s > 2) CHECK(0.33 * (s - 1) * (s - 1) < 1.2 * dt * rho);
    prev = s;
  }
}

TEST_CASE("configuration validation") {
  SimConfig c = small();
  c.dt = 1.0;
  CHECK_THROWS_AS(Solver(c).init(), ConfigInvalid);
  c = small();
  c.gamma = 1.5;
  CHECK_THROWS_AS(c.validate(), ConfigInvalid);
  c = small();
  c.t_end = 2.0;
  CHECK_THROWS_AS(c.validate(), ConfigInvalid);

  nlohmann::json j = to_json(small());
  CHECK(to_json(config_from_json(j)) == j);
  CHECK(config_hash(config_from_json(j)) == config_hash(small()));
  j["bogus"] = 1;
  CHECK_THROWS_AS(config_from_json(j), ConfigInvalid);
  j = to_json(small());
  j["dt"] = "fast";
  CHECK_THROWS_AS(config_from_json(j), ConfigInvalid);
}

TEST_CASE("checkpoint round trip and corruption") {
  SimConfig c = small();
  const SimState s = Solver(c).init();
  const auto dir = std::filesystem::temp_directory_path() / "landau_ckpt_test";
  std::filesystem::create_directories(dir);
  const std::string side = write_checkpoint((dir / "state").string(), s);
  const SimState r = read_checkpoint(side);
  CHECK(r.t == s.t);
  CHECK(r.f.grid() == s.f.grid());
  CHECK((r.f.data() == s.f.data()).all());
  {
    std::fstream bin((dir / "state.bin").string(), std::ios::in | std::ios::out | std::ios::binary);
    bin.seekp(8);
    bin.put('\x7f');
  }
  CHECK_THROWS_AS(read_checkpoint(side), ConfigInvalid);
  std::filesystem::remove_all(dir);
}

TEST_CASE("t_end = 0 returns the initial state") {
  SimConfig c = small(0.0);
  int calls = 0;
  const Solver solver(c);
  const SimState s = solver.run([&](const SimState&) { ++calls; });
  CHECK(calls == 1);
  CHECK(s.t == 0.0);
  CHECK(s.diagnostics.size() == 1);
  CHECK((s.f.data() == solver.init().f.data()).all());
}

TEST_CASE("two-mode profile: l1m norm is the sum of the per-mode velocity norms") {
  SimConfig c = small();
  c.profile.kind = "two_mode";
  const SimState s = Solver(c).init();
  // Unitary x normalisation: each mode contributes sqrt(vol_x) times its velocity norm.
  const PhaseField w = transform(s.f, Repr::fourier_x);
  const std::size_t nv = c.grid.v_size();
  double sum = 0.0;
  for (std::size_t ix = 0; ix < c.grid.x_size(); ++ix) {
    const auto seg = w.data().segment(static_cast<Eigen::Index>(ix * nv), static_cast<Eigen::Index>(nv));
    sum += std::sqrt(seg.abs2().sum() * c.grid.v_weight() * c.grid.x_volume());
  }
  CHECK(sum == doctest::Approx(c.eps0).epsilon(1e-10));
}

TEST_CASE("three spatial dimensions: oblique transport and conservation") {
  SimConfig c;
  c.grid.nx = 4;
  c.grid.nv = 16;
  c.grid.spatial_dims = 3;
  c.t_end = 0.05;
  c.dt = 0.05;
  const auto gauss = [](const double* v) { return std::exp(-0.5 * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2])); };

  SimConfig free = c;
  free.collision = false;
  Solver transport(free);
  PhaseField f = sample(c.grid, [&](const double* x, const double* v) {
    return cplx(std::cos(x[1] + x[2]) * gauss(v), 0.0);
  });
  transport.transport(f, 0.3);
  const PhaseField ref = sample(c.grid, [&](const double* x, const double* v) {
    return cplx(std::cos(x[1] + x[2] - 0.3 * (v[1] + v[2])) * gauss(v), 0.0);
  });
  CHECK(rel_diff(f, ref) <= 1e-12);

  const SimState s = Solver(c).run({});
  const ConservationDrift d = conservation_drift(s.diagnostics.front(), s.diagnostics.back());
  MESSAGE("3D drift mass " << d.mass << " momentum " << d.momentum << " energy " << d.energy);
  CHECK(d.max() <= 1e-6);
  CHECK(s.diagnostics.back().l2 < s.diagnostics.front().l2);
}
