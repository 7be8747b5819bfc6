#include <doctest.h>

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "btes/errors.hpp"
#include "btes/validate.hpp"
#include "btes/writers.hpp"

#include "helpers.hpp"

using namespace btes;

TEST_CASE("self-comparison returns exactly zero errors") {
  const ValidationResult result = self_check(btes::test::paper_config(), /*hours=*/0.5);
  CHECK(result.report.mean_error_in == 0.0);
  CHECK(result.report.std_error_in == 0.0);
  CHECK(result.report.mean_error_out == 0.0);
  CHECK(result.report.std_error_out == 0.0);
  CHECK(result.report.samples > 0);
}

TEST_CASE("a constant -0.5 K shift of the measured outlet adds +0.5 K to its mean error") {
  const Config cfg = btes::test::paper_config();
  const ValidationResult base_run = self_check(cfg, /*hours=*/0.25);

  MeasurementSeries original;
  original.times = base_run.traj.times;
  original.t_in = base_run.traj.t_in;
  original.t_out = base_run.traj.t_out;
  const ValidationResult clean = validate_bhe(cfg, original, /*hours=*/0.25);
  CHECK(clean.report.mean_error_out == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(clean.report.std_error_out == doctest::Approx(0.0).epsilon(1e-12));

  // Only the comparison target moves; the inlet forcing (and thus the replay)
  // is identical, so the outlet error translates and its spread does not.
  MeasurementSeries shifted = original;
  for (double& v : shifted.t_out) v -= 0.5;
  const ValidationResult shifted_run = validate_bhe(cfg, shifted, /*hours=*/0.25);
  CHECK(shifted_run.report.mean_error_out ==
        doctest::Approx(clean.report.mean_error_out + 0.5).epsilon(1e-12));
  CHECK(shifted_run.report.std_error_out ==
        doctest::Approx(clean.report.std_error_out).epsilon(1e-12));
  CHECK(shifted_run.report.mean_error_in ==
        doctest::Approx(clean.report.mean_error_in).epsilon(1e-12));
}

TEST_CASE("validation rejects a series shorter than the requested window") {
  const Config cfg = btes::test::paper_config();
  MeasurementSeries series;
  series.times = {0.0, 15.0, 30.0};
  series.t_in = {295.15, 295.2, 295.3};
  series.t_out = {295.15, 295.15, 295.2};
  CHECK_THROWS_AS(validate_bhe(cfg, series, /*hours=*/1.0), ArgumentError);
}

TEST_CASE("error report CSV: header plus one row per channel") {
  ErrorReport report;
  report.mean_error_in = 0.5;
  report.std_error_in = 0.25;
  report.mean_error_out = -0.125;
  report.std_error_out = 0.0625;
  report.samples = 7;
  const std::string path = "/tmp/btes_validate_report.csv";
  write_error_report_csv(path, report);
  std::ifstream in(path);
  std::string header, row_in, row_out, extra;
  REQUIRE(std::getline(in, header));
  REQUIRE(std::getline(in, row_in));
  REQUIRE(std::getline(in, row_out));
  CHECK_FALSE(std::getline(in, extra));
  CHECK(header == "channel,mean_error_K,std_error_K,samples");
  CHECK(row_in == "T_in,0.5,0.25,7");
  CHECK(row_out == "T_out,-0.125,0.0625,7");
}
