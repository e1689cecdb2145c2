#include <doctest.h>

#include <cmath>

#include "jscc/sweeps.hpp"

using namespace jscc;

TEST_CASE("region map labels match the analytic predicates") {
  RegionJob job;
  job.family = ChannelFamily::Bsc;
  job.kind = RegionMapKind::ExactRegions;
  job.t = 1.0;
  job.channel_axis = {0.01, 0.4, 8};
  job.q_axis = {0.02, 0.48, 8};
  const auto rows = region_map(job, {}, ExecPolicy::Serial);
  REQUIRE(rows.size() == 64);
  for (const auto& pt : rows) {
    JsccSolver s(JsccProblem(Source({pt.q, 1.0 - pt.q}), bsc(pt.channel_param), 1.0));
    std::string expect;
    if (s.t_entropy() >= s.capacity()) {
      expect = "A";
    } else if (s.t_source_critical_rate() >= s.rates().critical_rate - 1e-6) {
      expect = "B";
    } else {
      expect = s.t_source_critical_rate() < s.rates().expurgated_rate ? "C2" : "C1";
    }
    CHECK(pt.label == expect);
  }
}

TEST_CASE("region maps are identical under both execution policies") {
  RegionJob job;
  job.family = ChannelFamily::Bec;
  job.kind = RegionMapKind::Compare;
  job.t = 1.0;
  job.channel_axis = {0.02, 0.7, 10};
  job.q_axis = {0.02, 0.48, 10};
  const auto a = region_map(job, {}, ExecPolicy::Serial);
  const auto b = region_map(job, {}, ExecPolicy::Parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].label == b[i].label);
    CHECK(a[i].channel_param == b[i].channel_param);
    CHECK(a[i].q == b[i].q);
  }
  // all three labels occur on this window
  bool f = false, g = false, h = false;
  for (const auto& pt : a) {
    f |= pt.label == "F";
    g |= pt.label == "G";
    h |= pt.label == "H";
  }
  CHECK(f);
  CHECK(g);
  CHECK(h);
}

TEST_CASE("lossy region map distinguishes the lower-bound branches") {
  RegionJob job;
  job.family = ChannelFamily::Bsc;
  job.kind = RegionMapKind::Lossy;
  job.t = 1.0;
  job.delta = 0.1;
  job.channel_axis = {0.02, 0.3, 6};
  job.q_axis = {0.005, 0.48, 8};
  const auto rows = region_map(job, {}, ExecPolicy::Serial);
  bool a = false, b = false, c1 = false, c2 = false;
  for (const auto& pt : rows) {
    a |= pt.label == "A";
    b |= pt.label == "B";
    c1 |= pt.label == "C1";
    c2 |= pt.label == "C2";
  }
  CHECK(a);
  CHECK(b);
  CHECK(c1);
  CHECK(c2);
}

TEST_CASE("ratio table spot checks against printed values") {
  const std::vector<double> ts{0.75, 1.0};
  const std::vector<double> qs{0.15, 0.05};
  const std::vector<double> eps{0.12, 0.2};
  const auto cells = ratio_table_bsc(ts, qs, eps, {}, ExecPolicy::Serial);
  REQUIRE(cells.size() == 4);
  // (eps=0.12, t=0.75, q=0.15) -> 2.0 within print precision
  CHECK(cells[0].ratio.has_value());
  CHECK(*cells[0].ratio == doctest::Approx(2.0).epsilon(0.011));
  CHECK_FALSE(cells[0].is_lower_bound);
  // (eps=0.2, t=1, q=0.05) -> N/A
  CHECK_FALSE(cells[3].ratio.has_value());
  CHECK(ratio_cell_text(cells[3]) == "N/A");
}

TEST_CASE("csv emission is deterministic and carries parameters") {
  RegionJob job;
  job.channel_axis = {0.1, 0.3, 3};
  job.q_axis = {0.1, 0.3, 3};
  const auto rows = region_map(job, {}, ExecPolicy::Parallel);
  const std::string a = region_csv(job, rows);
  const std::string b = region_csv(job, region_map(job, {}, ExecPolicy::Serial));
  CHECK(a == b);
  CHECK(a.find("# region map:") == 0);
  CHECK(a.find("channel_param,q,label\n") != std::string::npos);
}

TEST_CASE("power gain rows interpolate the tandem curve") {
  PowerGainJob job;
  job.kind = QuantizedKind::Awgn;
  job.bits_list = {1};
  job.snr_lo_db = 2.0;
  job.snr_hi_db = 10.0;
  job.snr_step_db = 0.5;
  const auto rows = power_gain(job, {}, ExecPolicy::Serial);
  REQUIRE(rows.size() == 17);
  for (const auto& r : rows) {
    if (!r.db_shift) continue;
    // shifting by db_shift must land the tandem curve on this row's level
    const double target = r.snr_db + *r.db_shift;
    // find the bracketing rows and re-interpolate
    for (std::size_t j = 0; j + 1 < rows.size(); ++j) {
      if (rows[j].snr_db <= target && target <= rows[j + 1].snr_db) {
        const double frac = (target - rows[j].snr_db) / 0.5;
        const double et = rows[j].et + frac * (rows[j + 1].et - rows[j].et);
        CHECK(et == doctest::Approx(r.ej).epsilon(1e-9));
      }
    }
  }
  const std::string csv = power_gain_csv(job, rows);
  CHECK(csv.find("m,snr_db,") != std::string::npos);
}
