#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "apery/report_io.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Range {
  long lo = 0;
  long hi = 0;
};

// inclusive "lo..hi"
Range parse_range(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) {
    throw std::invalid_argument("range must be lo..hi, got '" + text + "'");
  }
  Range r;
  try {
    r.lo = std::stol(text.substr(0, sep));
    r.hi = std::stol(text.substr(sep + 2));
  } catch (const std::exception&) {
    throw std::invalid_argument("range must be lo..hi, got '" + text + "'");
  }
  if (r.lo > r.hi) {
    throw std::invalid_argument("empty range '" + text + "' (lo > hi)");
  }
  return r;
}

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  out << content;
}

int cmd_apery(long max_index, const std::string& format_name,
              const std::string& out_path) {
  const apery::AperyTable table(max_index);
  write_output(apery::format_apery_table(table, apery::parse_format(format_name)),
               out_path);
  return kExitPass;
}

int cmd_cm(const std::vector<long>& m_list, const std::string& format_name,
           const std::string& out_path) {
  std::vector<apery::ReductionResult> rows;
  rows.reserve(m_list.size());
  for (long m : m_list) {
    if (m < 1 || m % 2 == 0) {
      throw std::invalid_argument("cm: m must be odd and >= 1, got " +
                                  std::to_string(m));
    }
    rows.push_back(apery::reduce_odd_power(m));
  }
  write_output(apery::format_cm_table(rows, apery::parse_format(format_name)),
               out_path);
  return kExitPass;
}

int cmd_verify(const std::string& suite, const std::string& primes,
               const std::string& indices, const std::vector<long>& m_list,
               int jobs, const std::string& format_name,
               const std::string& out_path) {
  if (!apery::is_suite(suite)) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  apery::Ranges ranges;
  if (!primes.empty()) {
    const Range r = parse_range(primes);
    ranges.prime_lo = r.lo;
    ranges.prime_hi = r.hi;
  }
  if (!indices.empty()) {
    const Range r = parse_range(indices);
    ranges.n_lo = r.lo;
    ranges.n_hi = r.hi;
  }
  if (!m_list.empty()) {
    for (long m : m_list) {
      if (m < 1) {
        throw std::invalid_argument("verify: m must be >= 1, got " +
                                    std::to_string(m));
      }
      // lemma21 sums run over both parities; everything else needs odd m
      if (suite != "lemma21" && m % 2 == 0) {
        throw std::invalid_argument("verify: m must be odd, got " +
                                    std::to_string(m));
      }
    }
    ranges.m_list = m_list;
  } else if (suite == "lemma21") {
    ranges.m_list.clear();
    for (long m = 3; m <= 21; ++m) ranges.m_list.push_back(m);
  }

  const apery::BatchSummary summary = apery::run_batch(suite, ranges, jobs);
  write_output(
      apery::format_reports(summary.reports, apery::parse_format(format_name)),
      out_path);
  std::cerr << "suite " << suite << ": " << summary.total() << " checks, "
            << summary.failure_count() << " failures ("
            << summary.wall_seconds << " s)\n";
  if (summary.internal_error_count() > 0) return kExitInternal;
  return summary.failure_count() == 0 ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation and verification of Apery number congruences"};
  app.require_subcommand(1);

  long max_index = -1;
  std::vector<long> m_list;
  std::string suite;
  std::string primes;
  std::string indices;
  std::string format_name = "text";
  std::string out_path;
  int jobs = 1;

  auto add_output_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", out_path, "Write output to PATH instead of stdout");
  };

  CLI::App* apery_cmd =
      app.add_subcommand("apery", "Print A_0..A_N computed by the recurrence");
  apery_cmd->add_option("--max", max_index, "Largest index N")->required();
  add_output_flags(apery_cmd);

  CLI::App* cm_cmd = app.add_subcommand(
      "cm", "Print the constants c_m from the certified reduction");
  cm_cmd->add_option("--m", m_list, "Odd exponents m")
      ->required()
      ->delimiter(',');
  add_output_flags(cm_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a congruence verification suite");
  verify_cmd->add_option("suite", suite, "Suite name (see README)")->required();
  verify_cmd->add_option("--primes", primes, "Prime range lo..hi (default 5..300)");
  verify_cmd->add_option("--n", indices, "Index range lo..hi (default 1..300)");
  verify_cmd->add_option("--m", m_list, "Exponent list (default 1,3,...,21)")
      ->delimiter(',');
  verify_cmd->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  add_output_flags(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (apery_cmd->parsed()) {
      if (max_index < 0) {
        std::cerr << "error: --max must be >= 0\n";
        return kExitUsage;
      }
      return cmd_apery(max_index, format_name, out_path);
    }
    if (cm_cmd->parsed()) return cmd_cm(m_list, format_name, out_path);
    if (verify_cmd->parsed()) {
      return cmd_verify(suite, primes, indices, m_list, jobs, format_name,
                        out_path);
    }
  } catch (const apery::internal_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
