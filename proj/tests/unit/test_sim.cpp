#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "btes/errors.hpp"
#include "btes/sim.hpp"

#include "helpers.hpp"

using namespace btes;

namespace {

const BtesModel& small_model() {
  static const BtesModel model = build_model(btes::test::small_config(/*sigma=*/1));
  return model;
}

}  // namespace

TEST_CASE("scenario input schedule lookup") {
  Scenario sc;
  sc.n_steps = 20;
  sc.u_schedule = {{0, 100.0}, {10, -50.0}};
  sc.validate();
  CHECK(sc.u_at(0) == 100.0);
  CHECK(sc.u_at(9) == 100.0);
  CHECK(sc.u_at(10) == -50.0);
  CHECK(sc.u_at(19) == -50.0);
}

TEST_CASE("scenario validation rejects malformed schedules") {
  Scenario sc;
  sc.n_steps = 10;
  sc.u_schedule = {{1, 100.0}};  // must start at step 0
  CHECK_THROWS_AS(sc.validate(), ArgumentError);
  sc.u_schedule = {{0, 1.0}, {5, 2.0}, {5, 3.0}};  // non-increasing
  CHECK_THROWS_AS(sc.validate(), ArgumentError);
  sc.u_schedule = {{0, 1.0}};
  sc.n_steps = 0;
  CHECK_THROWS_AS(sc.validate(), ArgumentError);
}

TEST_CASE("ambient run stays at ambient; record grid is 0, stride, ..., n") {
  const BtesModel& model = small_model();
  Scenario sc;
  sc.n_steps = 1000;
  sc.u_schedule = {{0, 0.0}};
  const Trajectory traj = simulate(model, sc, /*stride=*/100);
  REQUIRE(traj.times.size() == 11);
  CHECK(traj.times.front() == 0.0);
  CHECK(traj.times.back() == doctest::Approx(1000 * 15.0));
  CHECK(traj.dt == doctest::Approx(15.0));
  for (size_t r = 0; r < traj.states.size(); ++r) {
    CHECK(traj.t_in[r] == doctest::Approx(295.15).epsilon(1e-9));
    CHECK(traj.t_out[r] == doctest::Approx(295.15).epsilon(1e-9));
    for (const double q : traj.q_bhe[r]) CHECK(std::abs(q) < 1e-6);
    for (const double v : traj.states[r]) CHECK(v == doctest::Approx(295.15).epsilon(1e-9));
  }
}

TEST_CASE("charging run: bounded, warms the inlet, hottest ground at the borehole") {
  const BtesModel& model = small_model();
  REQUIRE(model.rho_estimate < 1.0);
  Scenario sc;
  sc.n_steps = 4000;
  sc.u_schedule = {{0, 500.0}};
  const Trajectory traj = simulate(model, sc, /*stride=*/400);

  const std::vector<double>& last = traj.states.back();
  for (const double v : last) {
    CHECK(v >= 295.0);
    CHECK(v < 340.0);
  }
  CHECK(traj.t_in.back() > 295.5);
  // Positive power drives a positive borehole heat flux.
  CHECK(traj.q_bhe.back()[0] > 0.0);

  const std::vector<double> grid = extract_heatmap(model, traj, 10);
  REQUIRE(grid.size() == 25);
  const int hottest =
      static_cast<int>(std::max_element(grid.begin(), grid.end()) - grid.begin());
  // Hottest ground cell is one of the four cells around the BHE at cell 12
  // (cell 12 itself is the diagnostic average of those four).
  const bool at_borehole = hottest == 11 || hottest == 13 || hottest == 7 || hottest == 17 ||
                           hottest == 12;
  CHECK(at_borehole);
  // Heatmap matches the recorded ground states elementwise.
  for (int cell = 0; cell < 25; ++cell) {
    CHECK(grid[cell] == traj.states[10][model.sys.layout.ground_state(cell)]);
  }
}

TEST_CASE("initial-state and record-index errors") {
  const BtesModel& model = small_model();
  Scenario sc;
  sc.n_steps = 5;
  sc.u_schedule = {{0, 0.0}};
  sc.x0.assign(model.sys.layout.n() - 1, 295.15);  // wrong dimension
  CHECK_THROWS_AS(simulate(model, sc, 1), ArgumentError);

  sc.x0.assign(model.sys.layout.n(), 295.15);
  sc.x0[3] = std::numeric_limits<double>::quiet_NaN();
  // The input-validation layer rejects the non-finite state before stepping.
  CHECK_THROWS_AS(simulate(model, sc, 1), ArgumentError);

  sc.x0.clear();
  const Trajectory traj = simulate(model, sc, 1);
  CHECK_THROWS_AS(extract_heatmap(model, traj, 99), ArgumentError);
  CHECK_THROWS_AS(simulate(model, sc, 0), ArgumentError);
}

TEST_CASE("stride that does not divide n_steps still records step 0 and multiples") {
  const BtesModel& model = small_model();
  Scenario sc;
  sc.n_steps = 10;
  sc.u_schedule = {{0, 0.0}};
  const Trajectory traj = simulate(model, sc, /*stride=*/3);
  // Records at 0, 3, 6, 9.
  REQUIRE(traj.times.size() == 4);
  CHECK(traj.times[1] == doctest::Approx(3 * 15.0));
  CHECK(traj.times[3] == doctest::Approx(9 * 15.0));
}
