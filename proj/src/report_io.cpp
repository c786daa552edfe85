#include "rzs/report_io.hpp"

#include <cmath>

#include <fmt/format.h>

namespace rzs::io {

namespace {

std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

std::string json_fit(const LinearFit& fit) {
  return fmt::format(R"({{"slope": {}, "intercept": {}, "residual": {}}})", json_number(fit.slope),
                     json_number(fit.intercept), json_number(fit.residual));
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

void write_zero_table_csv(std::ostream& os, const ZeroTable& table) {
  os << "n,gamma,bracket_lo,bracket_hi\n";
  for (const auto& z : table.zeros) {
    os << z.index << ',' << format_number(z.gamma) << ',' << format_number(z.bracket_lo) << ','
       << format_number(z.bracket_hi) << '\n';
  }
}

void write_correlator_csv(std::ostream& os, std::span<const CorrelatorSample> samples) {
  os << "t,pi,correlator,asymptote\n";
  for (const auto& s : samples) {
    os << format_number(s.t) << ',' << format_number(s.pi_value) << ',' << format_number(s.correlator) << ','
       << (s.asymptote ? format_number(*s.asymptote) : std::string("nan")) << '\n';
  }
}

void write_report_csv(std::ostream& os, const CorrespondenceReport& report) {
  os << "n,gamma,prediction,asym_prediction,rel_dev\n";
  for (const auto& r : report.rows) {
    os << r.n << ',' << format_number(r.gamma_n) << ',' << format_number(r.prediction) << ','
       << format_number(r.asym_prediction) << ',' << format_number(r.rel_dev) << '\n';
  }
}

void write_report_json(std::ostream& os, const CorrespondenceReport& report,
                       const std::optional<LinearFit>& log_fit) {
  os << "{\n  \"m2\": " << json_number(report.m2) << ",\n";
  os << "  \"columns\": [\"n\", \"gamma\", \"prediction\", \"asym_prediction\", \"rel_dev\"],\n";
  os << "  \"rows\": [";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const auto& r = report.rows[i];
    os << (i == 0 ? "\n" : ",\n")
       << fmt::format("    [{}, {}, {}, {}, {}]", r.n, json_number(r.gamma_n), json_number(r.prediction),
                      json_number(r.asym_prediction), json_number(r.rel_dev));
  }
  os << "\n  ],\n";
  const auto& s = report.summary;
  os << "  \"summary\": {\n";
  os << "    \"max_rel_dev\": " << json_number(s.max_rel_dev) << ",\n";
  os << "    \"decades\": [";
  for (std::size_t i = 0; i < s.decades.size(); ++i) {
    const auto& d = s.decades[i];
    os << (i == 0 ? "" : ", ")
       << fmt::format(R"({{"n_lo": {}, "n_hi": {}, "count": {}, "mean_rel_dev": {}}})", d.n_lo, d.n_hi, d.count,
                      json_number(d.mean_rel_dev));
  }
  os << "],\n";
  os << "    \"fit\": " << json_fit(s.fit) << ",\n";
  os << "    \"normalized_slope\": " << json_number(s.normalized_slope) << "\n";
  os << "  },\n";
  os << "  \"log_slope_fit\": " << (log_fit ? json_fit(*log_fit) : std::string("null")) << "\n}\n";
}

void write_count_csv(std::ostream& os, const ZeroCountEstimate& est) {
  os << "t,n_main,n_correction,n_estimate,density\n"
     << format_number(est.t) << ',' << format_number(est.n_main) << ',' << format_number(est.n_correction) << ','
     << format_number(est.n_estimate) << ',' << format_number(est.density) << '\n';
}

void write_count_json(std::ostream& os, const ZeroCountEstimate& est) {
  os << fmt::format(
      "{{\"t\": {}, \"n_main\": {}, \"n_correction\": {}, \"n_estimate\": {}, \"density\": {}}}\n",
      json_number(est.t), json_number(est.n_main), json_number(est.n_correction), json_number(est.n_estimate),
      json_number(est.density));
}

void write_gap_csv(std::ostream& os, const GapResult& gap) {
  os << "coupling,n_components,cutoff,m2,residual\n"
     << format_number(gap.spec.coupling) << ',' << gap.spec.n_components << ',' << format_number(gap.spec.cutoff)
     << ',' << format_number(gap.m2) << ',' << format_number(gap.residual) << '\n';
}

void write_gap_json(std::ostream& os, const GapResult& gap) {
  os << fmt::format(
      "{{\"coupling\": {}, \"n_components\": {}, \"cutoff\": {}, \"m2\": {}, \"residual\": {}}}\n",
      json_number(gap.spec.coupling), gap.spec.n_components, json_number(gap.spec.cutoff), json_number(gap.m2),
      json_number(gap.residual));
}

}  // namespace rzs::io
