// Command-line front end: compute single constants, reproduce the r = 0..9
// table, run the verification suites, and trace bracket convergence.
// Exit codes: 0 success, 2 usage/configuration error, 3 verification or
// tolerance failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypgamma/closedform.hpp"
#include "hypgamma/format.hpp"
#include "hypgamma/squeeze.hpp"
#include "hypgamma/verify.hpp"

namespace {

using hypgamma::Bracket;
using hypgamma::ConstantResult;
using hypgamma::default_quad_tol;
using hypgamma::Exec;
using hypgamma::Flavor;
using hypgamma::format_value;
using hypgamma::kMaxDigits;
using hypgamma::Method;
using hypgamma::PrecReal;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

int env_default_digits() {
  if (const char* env = std::getenv("HYPGAMMA_DIGITS")) {
    const int v = std::atoi(env);
    if (v >= 1 && v <= kMaxDigits) return v;
  }
  return hypgamma::kDefaultDigits;
}

Exec exec_mode() {
  if (const char* env = std::getenv("HYPGAMMA_SERIAL"))
    if (env[0] != '\0' && env[0] != '0') return Exec::serial;
  return Exec::parallel;
}

struct OutputSink {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw hypgamma::DomainError("cannot open output file: " + path);
    out << text;
  }
};

std::vector<PrecReal> parse_r_list(const std::vector<std::string>& tokens, int digits) {
  std::vector<PrecReal> out;
  for (const auto& token : tokens) {
    const auto dots = token.find("..");
    if (dots != std::string::npos) {
      const long a = std::stol(token.substr(0, dots));
      const long b = std::stol(token.substr(dots + 2));
      if (a < 0 || b < a) throw hypgamma::DomainError("bad range: " + token);
      for (long r = a; r <= b; ++r) out.emplace_back(r, digits);
      continue;
    }
    PrecReal r = PrecReal::from_string(token, digits);
    if (!(r >= 0)) throw hypgamma::DomainError("r must be non-negative: " + token);
    out.push_back(std::move(r));
  }
  return out;
}

std::string flavor_name(Flavor f) { return f == Flavor::power ? "power" : "rising"; }

std::string order_label(const PrecReal& r) {
  if (r.is_integer()) return std::to_string(r.to_long());
  return format_value(r, 6);
}

std::string method_name(Method m) {
  switch (m) {
    case Method::closed: return "closed";
    case Method::squeeze: return "squeeze";
    default: return "both";
  }
}

std::string render(const ordered_json& rows, const std::string& format,
                   const std::vector<std::string>& csv_columns,
                   const std::string& text_report) {
  if (format == "json") return rows.dump(2) + "\n";
  if (format == "csv") {
    std::ostringstream os;
    for (size_t i = 0; i < csv_columns.size(); ++i)
      os << (i ? "," : "") << csv_columns[i];
    os << "\n";
    for (const auto& row : rows) {
      for (size_t i = 0; i < csv_columns.size(); ++i) {
        const auto& key = csv_columns[i];
        os << (i ? "," : "");
        if (row.contains(key)) {
          const auto& cell = row.at(key);
          if (cell.is_string())
            os << cell.get<std::string>();
          else
            os << cell.dump();
        }
      }
      os << "\n";
    }
    return os.str();
  }
  return text_report;
}

struct ComputeConfig {
  std::vector<std::string> r_tokens;
  int digits = env_default_digits();
  std::string method = "auto";
  std::string flavor = "power";
  long n_max = 2000;
  std::string quad_tol;
  std::string format = "text";
  std::string output;
};

int run_compute(const ComputeConfig& cfg) {
  const int digits = cfg.digits;
  const auto rs = parse_r_list(cfg.r_tokens, digits);
  const PrecReal tol = cfg.quad_tol.empty() ? default_quad_tol(digits)
                                            : PrecReal::from_string(cfg.quad_tol, digits);
  std::vector<Flavor> flavors;
  if (cfg.flavor == "power") flavors = {Flavor::power};
  else if (cfg.flavor == "rising") flavors = {Flavor::rising};
  else flavors = {Flavor::power, Flavor::rising};

  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  bool all_contained = true;
  for (const auto& r : rs) {
    const bool integral = r.is_integer();
    Method method;
    if (cfg.method == "auto") {
      method = integral ? Method::both : Method::squeeze;
    } else if (cfg.method == "closed") {
      method = Method::closed;
    } else if (cfg.method == "squeeze") {
      method = Method::squeeze;
    } else {
      method = Method::both;
    }
    if (!integral && method != Method::squeeze)
      throw hypgamma::DomainError(
          "closed-form evaluation needs integer r; use --method squeeze for r = " +
          r.to_string(6));

    for (Flavor flavor : flavors) {
      ordered_json row;
      row["r"] = order_label(r);
      row["flavor"] = flavor_name(flavor);
      row["method"] = method_name(method);
      row["digits"] = digits;
      text << "gamma_" << (flavor == Flavor::rising ? "h_bar" : "h") << "(" << order_label(r)
           << ")";

      std::optional<ConstantResult> closed;
      if (method != Method::squeeze) {
        const unsigned ri = static_cast<unsigned>(r.to_long());
        closed = flavor == Flavor::power ? hypgamma::closedform::gamma_h(ri, digits)
                                         : hypgamma::closedform::gamma_h_bar(ri, digits);
        row["value"] = format_value(closed->value, digits);
        row["est_error"] = format_value(closed->est_error, 3);
        text << " = " << format_value(closed->value, digits) << " [closed]";
      }
      if (method != Method::closed) {
        const Bracket b = hypgamma::squeeze::squeeze_estimate(flavor, r, cfg.n_max, tol,
                                                              digits, exec_mode());
        row["n"] = cfg.n_max;
        row["lower"] = format_value(b.lower, digits);
        row["upper"] = format_value(b.upper, digits);
        row["width"] = format_value(b.upper - b.lower, 3);
        if (!closed) {
          const PrecReal mid = (b.lower + b.upper) / 2;
          row["value"] = format_value(mid, digits);
          row["est_error"] = format_value((b.upper - b.lower) / 2 + 2 * tol, 3);
          text << " in [" << format_value(b.lower, digits) << ", "
               << format_value(b.upper, digits) << "] [squeeze, n=" << cfg.n_max << "]";
        } else {
          const bool contained =
              closed->value > b.lower - 2 * tol && closed->value < b.upper + 2 * tol;
          row["contained"] = contained;
          all_contained = all_contained && contained;
          text << ", bracket [" << format_value(b.lower, digits) << ", "
               << format_value(b.upper, digits) << "] contained=" << (contained ? "yes" : "no");
        }
      }
      text << "\n";
      rows.push_back(std::move(row));
    }
  }
  OutputSink{cfg.output}.write(render(rows, cfg.format,
                                      {"r", "flavor", "method", "value", "lower", "upper"},
                                      text.str()));
  return all_contained ? 0 : kExitFailure;
}

struct TableConfig {
  int digits = env_default_digits();
  std::string format = "text";
  std::string output;
};

int run_table(const TableConfig& cfg) {
  const int digits = cfg.digits;
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  text << "r   gamma_h" << std::string(digits > 7 ? digits - 7 : 1, ' ') << "  gamma_h_bar\n";
  for (unsigned r = 0; r <= 9; ++r) {
    const auto gh = hypgamma::closedform::gamma_h(r, digits);
    const auto ghb = hypgamma::closedform::gamma_h_bar(r, digits);
    ordered_json row;
    row["r"] = r;
    row["gamma_h"] = format_value(gh.value, digits);
    row["gamma_h_bar"] = format_value(ghb.value, digits);
    row["digits"] = digits;
    row["method"] = "closed";
    rows.push_back(std::move(row));
    text << r << "   " << format_value(gh.value, digits) << "  "
         << format_value(ghb.value, digits) << "\n";
  }
  OutputSink{cfg.output}.write(
      render(rows, cfg.format, {"r", "gamma_h", "gamma_h_bar"}, text.str()));
  return 0;
}

struct VerifyConfig {
  std::vector<std::string> suites;
  int digits = 0;  // 0: per-suite default
  int samples = 1000;
  long n_max = 2000;
  long chain_n = 500;
  std::optional<double> r_override;
  std::optional<long> n_override;
  std::string format = "text";
  std::string output;
};

int run_verify(const VerifyConfig& cfg) {
  hypgamma::verify::Options opts;
  if (cfg.digits > 0) opts.digits = cfg.digits;
  opts.samples = cfg.samples;
  opts.n_max = cfg.n_max;
  opts.chain_n = cfg.chain_n;
  opts.r_override = cfg.r_override;
  opts.n_override = cfg.n_override;
  opts.exec = exec_mode();

  std::vector<std::string> suites =
      cfg.suites.empty() ? hypgamma::verify::suite_names() : cfg.suites;
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  std::vector<std::string> failed;
  for (const auto& name : suites) {
    for (const auto& res : hypgamma::verify::run_suite(name, opts)) {
      text << (res.pass ? "PASS" : "FAIL") << "  " << res.suite << ": " << res.claim << " ("
           << res.detail << ")\n";
      ordered_json row;
      row["suite"] = res.suite;
      row["claim"] = res.claim;
      row["pass"] = res.pass;
      row["worst"] = res.worst;
      row["detail"] = res.detail;
      rows.push_back(std::move(row));
      if (!res.pass) failed.push_back(res.suite + ": " + res.claim);
    }
  }
  if (!failed.empty()) {
    text << "failed claims:\n";
    for (const auto& f : failed) text << "  " << f << "\n";
  }
  OutputSink{cfg.output}.write(
      render(rows, cfg.format, {"suite", "claim", "pass", "worst"}, text.str()));
  return failed.empty() ? 0 : kExitFailure;
}

struct ConvergenceConfig {
  std::string flavor = "power";
  std::string r = "1";
  std::string n_list = "10,100,1000";
  int digits = env_default_digits();
  std::string quad_tol;
  std::string format = "text";
  std::string output;
};

int run_convergence(const ConvergenceConfig& cfg) {
  const int digits = cfg.digits;
  const PrecReal r = PrecReal::from_string(cfg.r, digits);
  if (!(r >= 0)) throw hypgamma::DomainError("r must be non-negative");
  const Flavor flavor = cfg.flavor == "rising" ? Flavor::rising : Flavor::power;
  const PrecReal tol = cfg.quad_tol.empty() ? default_quad_tol(digits)
                                            : PrecReal::from_string(cfg.quad_tol, digits);
  std::vector<long> ns;
  std::stringstream ss(cfg.n_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) ns.push_back(std::stol(tok));
  if (ns.empty()) throw hypgamma::DomainError("empty n list");
  long n_max = 0;
  for (long n : ns) {
    if (n < 1) throw hypgamma::DomainError("n must be positive");
    n_max = std::max(n_max, n);
  }

  hypgamma::squeeze::SequenceTrace trace(flavor, r, n_max, tol, digits, exec_mode());
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  text << "n  lower  upper  width  refined_low  refined_high\n";
  for (long n : ns) {
    const PrecReal lo = trace.lower(n), up = trace.upper(n);
    const auto refined = trace.refined(n);
    ordered_json row;
    row["n"] = n;
    row["lower"] = format_value(lo, digits);
    row["upper"] = format_value(up, digits);
    row["width"] = format_value(up - lo, 3);
    row["refined_low"] = format_value(refined.first, digits);
    row["refined_high"] = format_value(refined.second, digits);
    rows.push_back(row);
    text << n << "  " << format_value(lo, digits) << "  " << format_value(up, digits) << "  "
         << format_value(up - lo, 3) << "  " << format_value(refined.first, digits) << "  "
         << format_value(refined.second, digits) << "\n";
  }
  OutputSink{cfg.output}.write(render(
      rows, cfg.format, {"n", "lower", "upper", "width", "refined_low", "refined_high"},
      text.str()));
  return 0;
}

void add_format_options(CLI::App* cmd, std::string& format, std::string& output) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--output", output, "write output to a file instead of stdout");
}

void check_digits(int digits) {
  if (digits < 1 || digits > kMaxDigits)
    throw hypgamma::DomainError("digits must be between 1 and " + std::to_string(kMaxDigits));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperharmonic generalizations of the Euler-Mascheroni constant"};
  app.require_subcommand(1);

  ComputeConfig compute_cfg;
  auto* compute = app.add_subcommand("compute", "compute constants for given orders r");
  compute->add_option("--r", compute_cfg.r_tokens, "order r (repeatable; a..b for ranges)")
      ->required();
  compute->add_option("--digits", compute_cfg.digits, "significant decimal digits");
  compute->add_option("--method", compute_cfg.method, "evaluation route")
      ->check(CLI::IsMember({"auto", "closed", "squeeze", "both"}));
  compute->add_option("--flavor", compute_cfg.flavor, "weight x^r, x^rising, or both")
      ->check(CLI::IsMember({"power", "rising", "both"}));
  compute->add_option("--n-max", compute_cfg.n_max, "bracket index for the squeeze route");
  compute->add_option("--quad-tol", compute_cfg.quad_tol, "total quadrature tolerance");
  add_format_options(compute, compute_cfg.format, compute_cfg.output);

  TableConfig table_cfg;
  auto* table = app.add_subcommand("table", "closed-form table for r = 0..9, both weights");
  table->add_option("--digits", table_cfg.digits, "significant decimal digits");
  add_format_options(table, table_cfg.format, table_cfg.output);

  VerifyConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", verify_cfg.suites, "suite names (default: all)")
      ->check(CLI::IsMember(hypgamma::verify::suite_names()));
  verify->add_option("--digits", verify_cfg.digits, "working precision override");
  verify->add_option("--samples", verify_cfg.samples, "random sample count");
  verify->add_option("--n-max", verify_cfg.n_max, "bracket index for containment/order suites");
  verify->add_option("--chain-n", verify_cfg.chain_n, "monotone chain length");
  double r_override = -1.0;
  long n_override = -1;
  verify->add_option("--r", r_override, "restrict identity suites to one order");
  verify->add_option("--n", n_override, "restrict identity suites to one index");
  add_format_options(verify, verify_cfg.format, verify_cfg.output);

  ConvergenceConfig conv_cfg;
  auto* conv = app.add_subcommand("convergence", "per-n bracket trace");
  conv->add_option("--flavor", conv_cfg.flavor, "power or rising")
      ->check(CLI::IsMember({"power", "rising"}));
  conv->add_option("--r", conv_cfg.r, "order r");
  conv->add_option("--n-list", conv_cfg.n_list, "comma-separated bracket indices");
  conv->add_option("--digits", conv_cfg.digits, "significant decimal digits");
  conv->add_option("--quad-tol", conv_cfg.quad_tol, "total quadrature tolerance");
  add_format_options(conv, conv_cfg.format, conv_cfg.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      check_digits(compute_cfg.digits);
      return run_compute(compute_cfg);
    }
    if (table->parsed()) {
      check_digits(table_cfg.digits);
      return run_table(table_cfg);
    }
    if (verify->parsed()) {
      if (verify_cfg.digits != 0) check_digits(verify_cfg.digits);
      if (r_override >= 0) verify_cfg.r_override = r_override;
      if (n_override >= 0) verify_cfg.n_override = n_override;
      return run_verify(verify_cfg);
    }
    if (conv->parsed()) {
      check_digits(conv_cfg.digits);
      return run_convergence(conv_cfg);
    }
  } catch (const hypgamma::ToleranceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const hypgamma::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
