// Command-line front end: bound reports, region maps, ratio tables,
// power-gain sweeps, lossy bounds, and channel export.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jscc/channel_models.hpp"
#include "jscc/io_json.hpp"
#include "jscc/jscc_bounds.hpp"
#include "jscc/lossy.hpp"
#include "jscc/sweeps.hpp"
#include "jscc/tandem.hpp"

namespace {

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

struct CommonOpts {
  std::string input;
  std::string out;
  double rho_step = 1e-3;
  double r_step = 1e-4;
  double rho_max = 8.0;
  double tol = 1e-6;

  jscc::SolverOptions solver() const {
    jscc::SolverOptions s;
    s.rho_step = rho_step;
    s.primal_r_step = r_step;
    s.rho_max = rho_max;
    s.rate_tol = tol;
    return s;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input) {
  if (with_input) cmd->add_option("--input", o.input, "problem JSON file")->required();
  cmd->add_option("--out", o.out, "output path (default: stdout)");
  cmd->add_option("--rho-step", o.rho_step, "E0 sampling step on [0,1]");
  cmd->add_option("--r-step", o.r_step, "primal oracle rate-grid step (times t)");
  cmd->add_option("--rho-max", o.rho_max, "initial tilt range for the upper hull");
  cmd->add_option("--tol", o.tol, "rate-comparison tolerance for exactness tests");
}

jscc::Channel named_channel(const std::string& name, double eps, double alpha, std::size_t k,
                            int m, double snr_db, std::optional<double> step) {
  using jscc::QuantizedKind;
  if (name == "bsc") return jscc::bsc(eps);
  if (name == "bec") return jscc::bec(alpha);
  if (name == "qsc") return jscc::q_ary_symmetric(k, eps);
  if (name == "gallager6x4") return jscc::gallager_6x4(eps);
  if (name == "awgn" || name == "rayleigh") {
    const QuantizedKind kind = name == "awgn" ? QuantizedKind::Awgn : QuantizedKind::Rayleigh;
    jscc::QuantizerConfig cfg =
        step ? jscc::QuantizerConfig{m, *step, snr_db, false} : jscc::optimize_step(snr_db, m, kind);
    cfg.snr_db = snr_db;
    return jscc::make_quantized(cfg, kind);
  }
  throw std::invalid_argument("unknown channel name: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"error exponents for joint source-channel coding over discrete memoryless systems"};
  app.require_subcommand(1);

  // bounds
  CommonOpts bounds_opts;
  CLI::App* cmd_bounds = app.add_subcommand("bounds", "classify the joint exponent bounds");
  add_common(cmd_bounds, bounds_opts, true);

  // tandem
  CommonOpts tandem_opts;
  CLI::App* cmd_tandem =
      app.add_subcommand("tandem", "tandem exponent, comparison predicates, and ratio");
  add_common(cmd_tandem, tandem_opts, true);

  // region
  CommonOpts region_opts;
  jscc::RegionJob region_job;
  std::string region_family = "bsc";
  std::string region_kind = "regions";
  std::size_t region_grid = 50;
  double region_param_lo = 0.005, region_param_hi = 0.45;
  double region_q_lo = 0.01, region_q_hi = 0.49;
  double region_t = 1.0, region_delta = 0.0;
  CLI::App* cmd_region = app.add_subcommand("region", "classification map over (channel, q) grid");
  add_common(cmd_region, region_opts, false);
  cmd_region->add_option("--channel", region_family, "bsc|bec")->check(CLI::IsMember({"bsc", "bec"}));
  cmd_region->add_option("--kind", region_kind, "regions|compare|lossy")
      ->check(CLI::IsMember({"regions", "compare", "lossy"}));
  cmd_region->add_option("--t", region_t, "transmission rate");
  cmd_region->add_option("--param-lo", region_param_lo, "channel parameter low end");
  cmd_region->add_option("--param-hi", region_param_hi, "channel parameter high end");
  cmd_region->add_option("--q-lo", region_q_lo, "source parameter low end");
  cmd_region->add_option("--q-hi", region_q_hi, "source parameter high end");
  cmd_region->add_option("--grid", region_grid, "grid points per axis");
  cmd_region->add_option("--delta", region_delta, "distortion threshold for lossy maps");

  // ratio-table
  CommonOpts ratio_opts;
  std::vector<double> ratio_t{0.5, 0.75, 0.75, 1.0};
  std::vector<double> ratio_q{0.1, 0.1, 0.15, 0.05};
  std::vector<double> ratio_eps{0.0005, 0.001, 0.005, 0.01, 0.04, 0.08, 0.12, 0.16, 0.2};
  CLI::App* cmd_ratio = app.add_subcommand("ratio-table", "joint/tandem exponent ratio table");
  add_common(cmd_ratio, ratio_opts, false);
  cmd_ratio->add_option("--t-list", ratio_t, "transmission rates (zipped with --q-list)")
      ->delimiter(',');
  cmd_ratio->add_option("--q-list", ratio_q, "source parameters (zipped with --t-list)")
      ->delimiter(',');
  cmd_ratio->add_option("--eps-list", ratio_eps, "BSC crossover probabilities")->delimiter(',');

  // power-gain
  CommonOpts gain_opts;
  jscc::PowerGainJob gain_job;
  std::string gain_kind = "awgn";
  std::vector<int> gain_m{1, 2, 3};
  CLI::App* cmd_gain = app.add_subcommand("power-gain", "exponents vs SNR for quantized channels");
  add_common(cmd_gain, gain_opts, false);
  cmd_gain->add_option("--kind", gain_kind, "awgn|rayleigh")
      ->check(CLI::IsMember({"awgn", "rayleigh"}));
  cmd_gain->add_option("--m-list", gain_m, "quantizer bit counts")->delimiter(',');
  cmd_gain->add_option("--t", gain_job.t, "transmission rate");
  cmd_gain->add_option("--q", gain_job.q, "source parameter");
  cmd_gain->add_option("--snr-lo", gain_job.snr_lo_db, "lowest SNR in dB");
  cmd_gain->add_option("--snr-hi", gain_job.snr_hi_db, "highest SNR in dB");
  cmd_gain->add_option("--snr-step", gain_job.snr_step_db, "SNR grid step in dB");

  // lossy-bounds
  CommonOpts lossy_opts;
  double lossy_delta = 0.0;
  CLI::App* cmd_lossy = app.add_subcommand("lossy-bounds", "Hamming-distortion exponent bounds");
  add_common(cmd_lossy, lossy_opts, true);
  cmd_lossy->add_option("--delta", lossy_delta, "distortion threshold in [0, 1/2]")->required();

  // channel-export
  CommonOpts exp_opts;
  std::string exp_name = "bsc";
  double exp_eps = 0.1, exp_alpha = 0.1, exp_snr = 0.0;
  std::size_t exp_k = 3;
  int exp_m = 2;
  std::optional<double> exp_step;
  CLI::App* cmd_export = app.add_subcommand("channel-export", "emit a named channel as JSON");
  add_common(cmd_export, exp_opts, false);
  cmd_export->add_option("--channel", exp_name, "bsc|bec|qsc|gallager6x4|awgn|rayleigh")
      ->required()
      ->check(CLI::IsMember({"bsc", "bec", "qsc", "gallager6x4", "awgn", "rayleigh"}));
  cmd_export->add_option("--eps", exp_eps, "crossover probability");
  cmd_export->add_option("--alpha", exp_alpha, "erasure probability");
  cmd_export->add_option("--k", exp_k, "alphabet size for qsc");
  cmd_export->add_option("--m", exp_m, "quantizer bits");
  cmd_export->add_option("--snr-db", exp_snr, "channel SNR in dB");
  double exp_step_val = 0.0;
  CLI::Option* step_opt = cmd_export->add_option("--step", exp_step_val, "quantizer step size");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_bounds) {
      jscc::JsccProblem p = jscc::load_problem(bounds_opts.input);
      jscc::BoundReport rep = jscc::classify(p, bounds_opts.solver());
      write_output(bounds_opts.out, jscc::bound_report_json(rep));
    } else if (*cmd_tandem) {
      jscc::JsccProblem p = jscc::load_problem(tandem_opts.input);
      jscc::TandemReport rep = jscc::tandem_report(p, tandem_opts.solver());
      write_output(tandem_opts.out, jscc::tandem_report_json(rep));
    } else if (*cmd_region) {
      region_job.family = region_family == "bsc" ? jscc::ChannelFamily::Bsc : jscc::ChannelFamily::Bec;
      region_job.kind = region_kind == "regions"
                            ? jscc::RegionMapKind::ExactRegions
                            : (region_kind == "compare" ? jscc::RegionMapKind::Compare
                                                        : jscc::RegionMapKind::Lossy);
      region_job.t = region_t;
      region_job.delta = region_delta;
      region_job.channel_axis = {region_param_lo, region_param_hi, region_grid};
      region_job.q_axis = {region_q_lo, region_q_hi, region_grid};
      const auto rows = jscc::region_map(region_job, region_opts.solver());
      write_output(region_opts.out, jscc::region_csv(region_job, rows));
    } else if (*cmd_ratio) {
      const auto cells = jscc::ratio_table_bsc(ratio_t, ratio_q, ratio_eps, ratio_opts.solver());
      write_output(ratio_opts.out, jscc::ratio_csv(ratio_t, ratio_q, ratio_eps, cells));
    } else if (*cmd_gain) {
      gain_job.kind = gain_kind == "awgn" ? jscc::QuantizedKind::Awgn : jscc::QuantizedKind::Rayleigh;
      gain_job.bits_list = gain_m;
      const auto rows = jscc::power_gain(gain_job, gain_opts.solver());
      write_output(gain_opts.out, jscc::power_gain_csv(gain_job, rows));
    } else if (*cmd_lossy) {
      jscc::JsccProblem p = jscc::load_problem(lossy_opts.input);
      if (p.source.alphabet_size() != 2) {
        throw std::invalid_argument("lossy bounds require a binary source");
      }
      const double q = std::min(p.source.probs[0], p.source.probs[1]);
      jscc::LossyProblem lp(q, p.channel, p.t, lossy_delta);
      const jscc::LossyReport rep = jscc::lossy_bounds(lp, lossy_opts.solver());
      write_output(lossy_opts.out, jscc::lossy_report_json(rep));
    } else if (*cmd_export) {
      if (step_opt->count() > 0) exp_step = exp_step_val;
      const jscc::Channel w =
          named_channel(exp_name, exp_eps, exp_alpha, exp_k, exp_m, exp_snr, exp_step);
      write_output(exp_opts.out, jscc::channel_json(w));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const jscc::NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
