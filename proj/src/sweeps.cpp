#include "jscc/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "jscc/lossy.hpp"

namespace jscc {

std::vector<double> AxisSpec::grid() const {
  if (steps < 2) throw std::invalid_argument("axis: steps must be >= 2");
  if (!(lo < hi)) throw std::invalid_argument("axis: lo must be below hi");
  std::vector<double> g(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  }
  return g;
}

namespace {

Channel family_channel(ChannelFamily family, double param) {
  return family == ChannelFamily::Bsc ? bsc(param) : bec(param);
}

std::string exact_region_label(const BoundReport& rep) {
  switch (rep.tightness) {
    case Tightness::ZeroExponent:
      return "A";
    case Tightness::Exact:
      return "B";
    case Tightness::Bracketed:
      break;
  }
  if (!rep.expurgated_applicable) return "C";
  return rep.expurgated_improves ? "C2" : "C1";
}

std::string compare_label(JsccSolver& solver) {
  if (solver.t_entropy() >= solver.capacity()) return "G";
  TandemReport tr = tandem_report(solver);
  return tr.beats_tandem ? "F" : "H";
}

std::string lossy_label(const LossyReport& rep) {
  switch (rep.tightness) {
    case Tightness::ZeroExponent:
      return "A";
    case Tightness::Exact:
      return "B";
    case Tightness::Bracketed:
      break;
  }
  return rep.lower_branch == LossyLowerBranch::Hull ? "C1" : "C2";
}

}  // namespace

std::vector<RegionPoint> region_map(const RegionJob& job, const SolverOptions& opt,
                                    ExecPolicy policy) {
  const std::vector<double> params = job.channel_axis.grid();
  const std::vector<double> qs = job.q_axis.grid();
  std::vector<RegionPoint> rows(params.size() * qs.size());
  parallel_for(rows.size(), policy, [&](std::size_t idx) {
    const double param = params[idx / qs.size()];
    const double q = qs[idx % qs.size()];
    RegionPoint& pt = rows[idx];
    pt.channel_param = param;
    pt.q = q;
    const Channel w = family_channel(job.family, param);
    switch (job.kind) {
      case RegionMapKind::ExactRegions: {
        JsccSolver solver(JsccProblem(Source({q, 1.0 - q}), w, job.t), opt);
        pt.label = exact_region_label(solver.classify());
        break;
      }
      case RegionMapKind::Compare: {
        JsccSolver solver(JsccProblem(Source({q, 1.0 - q}), w, job.t), opt);
        pt.label = compare_label(solver);
        break;
      }
      case RegionMapKind::Lossy: {
        pt.label = lossy_label(lossy_bounds(LossyProblem(q, w, job.t, job.delta), opt));
        break;
      }
    }
  });
  return rows;
}

std::vector<RatioCell> ratio_table_bsc(const std::vector<double>& t_list,
                                       const std::vector<double>& q_list,
                                       const std::vector<double>& eps_list,
                                       const SolverOptions& opt, ExecPolicy policy) {
  if (t_list.size() != q_list.size()) {
    throw std::invalid_argument("ratio table: t list and q list must have equal length");
  }
  std::vector<RatioCell> cells(eps_list.size() * t_list.size());
  parallel_for(cells.size(), policy, [&](std::size_t idx) {
    const std::size_t row = idx / t_list.size();
    const std::size_t col = idx % t_list.size();
    RatioCell& cell = cells[idx];
    cell.epsilon = eps_list[row];
    cell.t = t_list[col];
    cell.q = q_list[col];
    JsccSolver solver(JsccProblem(Source({cell.q, 1.0 - cell.q}), bsc(cell.epsilon), cell.t), opt);
    const TandemReport rep = tandem_report(solver);
    if (rep.zero_exponents) {
      cell.ratio = std::nullopt;
    } else {
      cell.ratio = rep.ratio;
      cell.is_lower_bound = rep.ratio_is_lower_bound;
    }
  });
  return cells;
}

std::vector<PowerGainRow> power_gain(const PowerGainJob& job, const SolverOptions& opt,
                                     ExecPolicy policy) {
  std::vector<double> snrs;
  for (double s = job.snr_lo_db; s <= job.snr_hi_db + 1e-9; s += job.snr_step_db) snrs.push_back(s);

  std::vector<PowerGainRow> rows(job.bits_list.size() * snrs.size());
  parallel_for(rows.size(), policy, [&](std::size_t idx) {
    const int m = job.bits_list[idx / snrs.size()];
    const double snr = snrs[idx % snrs.size()];
    PowerGainRow& row = rows[idx];
    row.bits = m;
    row.snr_db = snr;
    const QuantizerConfig cfg = optimize_step(snr, m, job.kind);
    row.step_size = cfg.step_size;
    const Channel w = make_quantized(cfg, job.kind);
    JsccSolver solver(JsccProblem(Source({job.q, 1.0 - job.q}), w, job.t), opt);
    const TandemReport rep = tandem_report(solver);
    if (rep.zero_exponents) {
      row.ej = row.et = 0.0;
      row.ej_exact = row.et_exact = true;
      return;
    }
    row.ej_exact = rep.ej_value.has_value();
    row.ej = row.ej_exact ? *rep.ej_value : rep.ej_lower;
    row.et_exact = rep.et_value.has_value();
    row.et = row.et_exact ? *rep.et_value : rep.et_upper;
  });

  // dB shift per row: SNR where the tandem curve reaches this row's E_J
  const std::size_t n = snrs.size();
  for (std::size_t b = 0; b < job.bits_list.size(); ++b) {
    PowerGainRow* block = rows.data() + b * n;
    for (std::size_t i = 0; i < n; ++i) {
      const double level = block[i].ej;
      if (!(level > 0.0)) continue;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        if (block[j].et <= level && block[j + 1].et >= level) {
          const double span = block[j + 1].et - block[j].et;
          const double frac = span > 0.0 ? (level - block[j].et) / span : 0.0;
          block[i].db_shift = block[j].snr_db + frac * job.snr_step_db - block[i].snr_db;
          break;
        }
      }
    }
  }
  return rows;
}

std::string format_sig9(double v) {
  char buf[40];
  if (std::isinf(v)) return "inf";
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string ratio_cell_text(const RatioCell& cell) {
  if (!cell.ratio) return "N/A";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", *cell.ratio);
  std::string s(buf);
  if (cell.is_lower_bound) s += "+";
  return s;
}

std::string region_csv(const RegionJob& job, const std::vector<RegionPoint>& rows) {
  std::ostringstream out;
  const char* fam = job.family == ChannelFamily::Bsc ? "bsc" : "bec";
  const char* kind = job.kind == RegionMapKind::ExactRegions
                         ? "regions"
                         : (job.kind == RegionMapKind::Compare ? "compare" : "lossy");
  out << "# region map: family=" << fam << " kind=" << kind << " t=" << format_sig9(job.t)
      << " param=[" << format_sig9(job.channel_axis.lo) << "," << format_sig9(job.channel_axis.hi)
      << "]x" << job.channel_axis.steps << " q=[" << format_sig9(job.q_axis.lo) << ","
      << format_sig9(job.q_axis.hi) << "]x" << job.q_axis.steps;
  if (job.kind == RegionMapKind::Lossy) out << " delta=" << format_sig9(job.delta);
  out << "\n";
  out << "channel_param,q,label\n";
  for (const RegionPoint& pt : rows) {
    out << format_sig9(pt.channel_param) << "," << format_sig9(pt.q) << "," << pt.label << "\n";
  }
  return out.str();
}

std::string ratio_csv(const std::vector<double>& t_list, const std::vector<double>& q_list,
                      const std::vector<double>& eps_list, const std::vector<RatioCell>& cells) {
  std::ostringstream out;
  out << "# joint-over-tandem exponent ratios for binary source and BSC; '+' marks a lower bound\n";
  out << "epsilon";
  for (std::size_t c = 0; c < t_list.size(); ++c) {
    out << ",t" << format_sig9(t_list[c]) << "_q" << format_sig9(q_list[c]);
  }
  out << "\n";
  for (std::size_t r = 0; r < eps_list.size(); ++r) {
    out << format_sig9(eps_list[r]);
    for (std::size_t c = 0; c < t_list.size(); ++c) {
      out << "," << ratio_cell_text(cells[r * t_list.size() + c]);
    }
    out << "\n";
  }
  return out.str();
}

std::string power_gain_csv(const PowerGainJob& job, const std::vector<PowerGainRow>& rows) {
  std::ostringstream out;
  out << "# power gain sweep: kind=" << (job.kind == QuantizedKind::Awgn ? "awgn" : "rayleigh")
      << " t=" << format_sig9(job.t) << " q=" << format_sig9(job.q) << " snr=["
      << format_sig9(job.snr_lo_db) << "," << format_sig9(job.snr_hi_db) << "] step "
      << format_sig9(job.snr_step_db) << " dB\n";
  out << "m,snr_db,step_size,e_joint,e_joint_exact,e_tandem,e_tandem_exact,db_shift\n";
  for (const PowerGainRow& r : rows) {
    out << r.bits << "," << format_sig9(r.snr_db) << "," << format_sig9(r.step_size) << ","
        << format_sig9(r.ej) << "," << (r.ej_exact ? 1 : 0) << "," << format_sig9(r.et) << ","
        << (r.et_exact ? 1 : 0) << ",";
    out << (r.db_shift ? format_sig9(*r.db_shift) : "nan");
    out << "\n";
  }
  return out.str();
}

}  // namespace jscc
