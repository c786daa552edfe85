#pragma once

// Text serialisation of tables and reports. Numbers are written with 17
// significant digits ('.' radix, '\n' line ends) so every double round-trips.

#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "rzs/bubble.hpp"
#include "rzs/correspondence.hpp"
#include "rzs/zeta.hpp"

namespace rzs::io {

std::string format_number(double v);

// n,gamma,bracket_lo,bracket_hi
void write_zero_table_csv(std::ostream& os, const ZeroTable& table);

// t,pi,correlator,asymptote (asymptote "nan" where undefined)
void write_correlator_csv(std::ostream& os, std::span<const CorrelatorSample> samples);

// n,gamma,prediction,asym_prediction,rel_dev
void write_report_csv(std::ostream& os, const CorrespondenceReport& report);

// {"m2", "columns", "rows": [[...]], "summary": {...}, "log_slope_fit": {...}|null}
void write_report_json(std::ostream& os, const CorrespondenceReport& report,
                       const std::optional<LinearFit>& log_fit = std::nullopt);

void write_count_csv(std::ostream& os, const ZeroCountEstimate& est);
void write_count_json(std::ostream& os, const ZeroCountEstimate& est);

struct GapResult {
  GapEquationSpec spec;
  double m2;
  double residual;
};

void write_gap_csv(std::ostream& os, const GapResult& gap);
void write_gap_json(std::ostream& os, const GapResult& gap);

}  // namespace rzs::io
