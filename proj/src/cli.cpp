#include "rzs/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "rzs/bubble.hpp"
#include "rzs/correspondence.hpp"
#include "rzs/report_io.hpp"
#include "rzs/zeta.hpp"

namespace rzs::cli {

namespace {

namespace fs = std::filesystem;

class IoError : public Error {
 public:
  using Error::Error;
};

unsigned parse_threads(const char* env) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (env == nullptr || *env == '\0') return hw;
  const std::string_view text(env);
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw UsageError(fmt::format("RZS_THREADS must be a positive integer (got '{}')", text));
  }
  return std::min(value, hw);
}

// Each subcommand owns its format slot so that defaults do not leak between
// subcommands.
void add_output_flags(CLI::App* sub, RunConfig& cfg, OutputFormat& format) {
  sub->add_option("--out", cfg.out_path, "Output file (default: stdout)");
  sub->add_option("--format", format, "Output format: csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}}));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void validate(const RunConfig& c) {
  switch (c.command) {
    case Command::zeros:
      require(c.t_min >= 0.0 && c.t_max > c.t_min, "zeros: need 0 <= --t-min < --t-max");
      require(c.tol > 0.0, "zeros: --tol must be positive");
      break;
    case Command::count:
      require(c.t > 0.0 && std::isfinite(c.t), "count: --t must be positive");
      break;
    case Command::bubble:
      require(c.grid_t_min > 0.0 && c.grid_t_max > c.grid_t_min, "bubble: need 0 < --t-min < --t-max");
      require(c.points >= 2, "bubble: --points must be at least 2");
      require(c.mass2 > 0.0, "bubble: --mass2 must be positive");
      break;
    case Command::gap:
      require(c.coupling > 0.0 && c.cutoff > 0.0 && c.n_components >= 2,
              "gap: need --coupling > 0, --cutoff > 0, --n-components >= 2");
      break;
    case Command::compare:
      require(c.n_max >= 10, "compare: --n-max must be at least 10");
      require(c.mass2 > 0.0, "compare: --mass2 must be positive");
      require(c.tol > 0.0, "compare: --tol must be positive");
      break;
  }
}

ZeroTable scan_for_count(int n_max, double tol, const ScanOptions& opts) {
  double t_scan = std::min(1.2 * height_for_count(n_max, opts.count_correction), kMaxHeight);
  for (;;) {
    ZeroTable table = scan_zeros(0.0, t_scan, tol, opts);
    if (static_cast<int>(table.size()) >= n_max) return table;
    if (t_scan >= kMaxHeight) {
      throw PrecisionExceeded(fmt::format("compare: only {} zeros below t = {}", table.size(), kMaxHeight));
    }
    t_scan = std::min(1.2 * t_scan, kMaxHeight);
  }
}

std::string render(const RunConfig& c) {
  validate(c);
  std::ostringstream os;
  const bool json = c.format == OutputFormat::json;
  ScanOptions scan;
  scan.threads = c.threads;

  switch (c.command) {
    case Command::zeros: {
      const ZeroTable table = scan_zeros(c.t_min, c.t_max, c.tol, scan);
      if (json) {
        os << "{\"t_max\": " << io::format_number(table.t_max) << ", \"stride\": " << io::format_number(table.stride)
           << ",\n \"columns\": [\"n\", \"gamma\", \"bracket_lo\", \"bracket_hi\"],\n \"zeros\": [";
        for (std::size_t i = 0; i < table.zeros.size(); ++i) {
          const auto& z = table.zeros[i];
          os << (i == 0 ? "\n  " : ",\n  ") << '[' << z.index << ", " << io::format_number(z.gamma) << ", "
             << io::format_number(z.bracket_lo) << ", " << io::format_number(z.bracket_hi) << ']';
        }
        os << "\n ]}\n";
      } else {
        io::write_zero_table_csv(os, table);
      }
      break;
    }
    case Command::count: {
      const auto est = count_zeros(c.t, c.correction);
      json ? io::write_count_json(os, est) : io::write_count_csv(os, est);
      break;
    }
    case Command::bubble: {
      std::vector<CorrelatorSample> samples;
      const double log_lo = std::log(c.grid_t_min);
      const double log_hi = std::log(c.grid_t_max);
      for (int i = 0; i < c.points; ++i) {
        double t = std::exp(log_lo + (log_hi - log_lo) * i / (c.points - 1));
        if (i == 0) t = c.grid_t_min;
        if (i + 1 == c.points) t = c.grid_t_max;
        samples.push_back(correlator_sample(t, c.mass2));
      }
      if (json) {
        os << "{\"m2\": " << io::format_number(c.mass2)
           << ",\n \"columns\": [\"t\", \"pi\", \"correlator\", \"asymptote\"],\n \"samples\": [";
        for (std::size_t i = 0; i < samples.size(); ++i) {
          const auto& s = samples[i];
          os << (i == 0 ? "\n  " : ",\n  ") << '[' << io::format_number(s.t) << ", " << io::format_number(s.pi_value)
             << ", " << io::format_number(s.correlator) << ", "
             << (s.asymptote ? io::format_number(*s.asymptote) : std::string("null")) << ']';
        }
        os << "\n ]}\n";
      } else {
        io::write_correlator_csv(os, samples);
      }
      break;
    }
    case Command::gap: {
      const GapEquationSpec spec{c.coupling, c.n_components, c.cutoff};
      const double m2 = gap_mass(spec);
      const io::GapResult result{spec, m2, gap_residual(spec, m2)};
      json ? io::write_gap_json(os, result) : io::write_gap_csv(os, result);
      break;
    }
    case Command::compare: {
      const ZeroTable table = scan_for_count(c.n_max, c.tol, scan);
      const auto report = build_report(table, c.mass2, c.n_max);
      std::optional<LinearFit> fit;
      if (report.rows.size() >= 50) fit = log_slope_fit(report);
      json ? io::write_report_json(os, report, fit) : io::write_report_csv(os, report);
      break;
    }
  }
  return std::move(os).str();
}

void write_atomically(const std::string& path, const std::string& content) {
  const fs::path target(path);
  fs::path temp = target;
  temp += fmt::format(".tmp-{}", ::getpid());
  {
    std::ofstream f(temp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError(fmt::format("cannot open '{}' for writing", temp.string()));
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(temp, ec);
      throw IoError(fmt::format("write to '{}' failed", temp.string()));
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(temp, ignored);
    throw IoError(fmt::format("cannot move output into '{}': {}", path, ec.message()));
  }
}

}  // namespace

std::optional<RunConfig> parse_command_line(const std::vector<std::string>& args, std::string* help_text,
                                            const char* threads_env) {
  RunConfig cfg;
  std::map<Command, OutputFormat> formats = {{Command::zeros, OutputFormat::csv},
                                             {Command::count, OutputFormat::csv},
                                             {Command::bubble, OutputFormat::csv},
                                             {Command::gap, OutputFormat::csv},
                                             {Command::compare, OutputFormat::json}};
  CLI::App app{"Riemann zeros and the large-N sigma-model correlator", "rzs"};
  app.require_subcommand(1);

  auto* zeros = app.add_subcommand("zeros", "Scan critical-line zeros and emit the zero table");
  zeros->add_option("--t-min", cfg.t_min, "Lower end of the reported range")->capture_default_str();
  zeros->add_option("--t-max", cfg.t_max, "Upper scan height")->required();
  zeros->add_option("--tol", cfg.tol, "Bisection bracket width")->capture_default_str();
  add_output_flags(zeros, cfg, formats[Command::zeros]);

  auto* count = app.add_subcommand("count", "Riemann-von Mangoldt count and density at height t");
  count->add_option("--t", cfg.t, "Height")->required();
  count->add_option("--correction", cfg.correction, "Additive constant in N(T)")->capture_default_str();
  add_output_flags(count, cfg, formats[Command::count]);

  auto* bubble = app.add_subcommand("bubble", "Polarization and correlator on a log-spaced t grid");
  bubble->add_option("--t-min", cfg.grid_t_min, "Smallest t = p^2")->capture_default_str();
  bubble->add_option("--t-max", cfg.grid_t_max, "Largest t = p^2")->capture_default_str();
  bubble->add_option("--points", cfg.points, "Grid points")->capture_default_str();
  bubble->add_option("--mass2", cfg.mass2, "Mass squared")->capture_default_str();
  add_output_flags(bubble, cfg, formats[Command::bubble]);

  auto* gap = app.add_subcommand("gap", "Solve the saddle-point gap equation for m^2");
  gap->add_option("--coupling", cfg.coupling, "Bare coupling g0")->required();
  gap->add_option("--n-components", cfg.n_components, "Number of field components N")->required();
  gap->add_option("--cutoff", cfg.cutoff, "Momentum cutoff")->required();
  add_output_flags(gap, cfg, formats[Command::gap]);

  auto* compare = app.add_subcommand("compare", "Compare zeros gamma_n with the correlator at t = n");
  compare->add_option("--n-max", cfg.n_max, "Largest zero index")->required();
  compare->add_option("--tol", cfg.tol, "Bisection bracket width")->capture_default_str();
  double compare_mass2 = kDefaultMass2;
  compare->add_option("--mass2", compare_mass2, "Mass squared (default 2 pi)");
  add_output_flags(compare, cfg, formats[Command::compare]);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    if (help_text != nullptr) *help_text = app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    if (help_text != nullptr) *help_text = app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (zeros->parsed()) cfg.command = Command::zeros;
  if (count->parsed()) cfg.command = Command::count;
  if (bubble->parsed()) cfg.command = Command::bubble;
  if (gap->parsed()) cfg.command = Command::gap;
  if (compare->parsed()) {
    cfg.command = Command::compare;
    cfg.mass2 = compare_mass2;
  }
  cfg.format = formats[cfg.command];
  cfg.threads = parse_threads(threads_env);
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string content = render(config);
    if (config.out_path.empty()) {
      out << content;
      out.flush();
    } else {
      write_atomically(config.out_path, content);
    }
    return kOk;
  } catch (const IoError& e) {
    err << "rzs: I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const Error& e) {
    err << "rzs: " << e.what() << '\n';
    return kModuleError;
  } catch (const std::exception& e) {
    err << "rzs: unexpected error: " << e.what() << '\n';
    return kModuleError;
  }
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  std::optional<RunConfig> config;
  try {
    std::string help;
    config = parse_command_line(args, &help, std::getenv("RZS_THREADS"));
    if (!config) {
      out << help;
      return kOk;
    }
  } catch (const UsageError& e) {
    std::string message = e.what();
    std::replace(message.begin(), message.end(), '\n', ' ');
    err << "rzs: usage: " << message << '\n';
    return kUsage;
  }
  return run(*config, out, err);
}

}  // namespace rzs::cli
