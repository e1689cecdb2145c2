#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jscc/channel_models.hpp"
#include "jscc/jscc_bounds.hpp"
#include "jscc/parallel.hpp"
#include "jscc/tandem.hpp"

namespace jscc {

enum class ChannelFamily { Bsc, Bec };

struct AxisSpec {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t steps = 2;  // number of grid points, >= 2

  std::vector<double> grid() const;
};

enum class RegionMapKind {
  ExactRegions,  // A / B / C (C1 / C2 when the expurgated bound applies)
  Compare,       // F / G / H
  Lossy          // A / B / C1 / C2 at a distortion threshold
};

struct RegionPoint {
  double channel_param = 0.0;
  double q = 0.0;
  std::string label;
};

struct RegionJob {
  ChannelFamily family = ChannelFamily::Bsc;
  RegionMapKind kind = RegionMapKind::ExactRegions;
  double t = 1.0;
  AxisSpec channel_axis;
  AxisSpec q_axis;
  double delta = 0.0;  // Lossy maps only
};

std::vector<RegionPoint> region_map(const RegionJob& job, const SolverOptions& opt = {},
                                    ExecPolicy policy = ExecPolicy::Parallel);

struct RatioCell {
  double epsilon = 0.0;
  double t = 1.0;
  double q = 0.1;
  std::optional<double> ratio;  // absent = N/A
  bool is_lower_bound = false;
};

// One column per (t, q) pair (the lists are zipped), one row per epsilon.
std::vector<RatioCell> ratio_table_bsc(const std::vector<double>& t_list,
                                       const std::vector<double>& q_list,
                                       const std::vector<double>& eps_list,
                                       const SolverOptions& opt = {},
                                       ExecPolicy policy = ExecPolicy::Parallel);

struct PowerGainRow {
  int bits = 1;
  double snr_db = 0.0;
  double step_size = 0.0;
  double ej = 0.0;  // exact value, or the best lower bound
  bool ej_exact = false;
  double et = 0.0;  // exact value, or the upper bound
  bool et_exact = false;
  std::optional<double> db_shift;  // extra SNR tandem needs to reach ej at this row
};

struct PowerGainJob {
  QuantizedKind kind = QuantizedKind::Awgn;
  std::vector<int> bits_list = {1, 2, 3};
  double t = 0.75;
  double q = 0.1;
  double snr_lo_db = -2.0;
  double snr_hi_db = 12.0;
  double snr_step_db = 0.25;
};

std::vector<PowerGainRow> power_gain(const PowerGainJob& job, const SolverOptions& opt = {},
                                     ExecPolicy policy = ExecPolicy::Parallel);

// CSV emission: a '#' comment line recording the parameters, then a header
// row, then data rows; floats printed with 9 significant digits, the
// unbounded marker as "inf". Output is byte-stable for identical inputs.
std::string region_csv(const RegionJob& job, const std::vector<RegionPoint>& rows);
std::string ratio_csv(const std::vector<double>& t_list, const std::vector<double>& q_list,
                      const std::vector<double>& eps_list, const std::vector<RatioCell>& cells);
std::string power_gain_csv(const PowerGainJob& job, const std::vector<PowerGainRow>& rows);

std::string format_sig9(double v);
std::string ratio_cell_text(const RatioCell& cell);  // e.g. "2.0", "1.70+", "N/A"

}  // namespace jscc
