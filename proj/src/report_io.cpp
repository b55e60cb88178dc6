#include "apery/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace apery {

using nlohmann::json;

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

namespace {

std::string params_compact(const CongruenceReport& r) {
  std::string out;
  for (const auto& [k, v] : r.params) {
    if (!out.empty()) out += ";";
    out += k + "=" + v;
  }
  return out;
}

std::string valuation_str(const CongruenceReport& r) {
  return r.diff_valuation_infinite ? "inf" : std::to_string(r.diff_valuation);
}

json report_to_json(const CongruenceReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json j;
  j["check"] = r.check;
  j["params"] = std::move(params);
  j["modulus"] = r.modulus.get_str();
  j["lhs"] = r.lhs.get_str();
  j["rhs"] = r.rhs.get_str();
  j["diff_valuation"] =
      r.diff_valuation_infinite ? json("inf") : json(r.diff_valuation);
  j["pass"] = r.pass;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace

std::string format_reports(const std::vector<CongruenceReport>& reports,
                           OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      json arr = json::array();
      for (const auto& r : reports) arr.push_back(report_to_json(r));
      return arr.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "check,params,modulus,lhs,rhs,diff_valuation,pass\n";
      for (const auto& r : reports) {
        out << r.check << ',' << params_compact(r) << ',' << r.modulus << ','
            << r.lhs << ',' << r.rhs << ',' << valuation_str(r) << ','
            << (r.pass ? "true" : "false") << '\n';
      }
      return out.str();
    }
    case OutputFormat::text: {
      std::ostringstream out;
      for (const auto& r : reports) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.check;
        for (const auto& [k, v] : r.params) out << ' ' << k << '=' << v;
        if (!r.error.empty()) {
          out << "  error: " << r.error;
        } else if (r.modulus == 0) {
          out << "  lhs=" << r.lhs << " rhs=" << r.rhs << " (exact)";
        } else {
          out << "  mod " << r.modulus << ": lhs=" << r.lhs
              << " rhs=" << r.rhs << " v=" << valuation_str(r);
        }
        out << '\n';
      }
      return out.str();
    }
  }
  throw std::logic_error("format_reports: unreachable");
}

std::string format_cm_table(const std::vector<ReductionResult>& rows,
                            OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      json arr = json::array();
      for (const auto& r : rows) {
        json j;
        j["m"] = r.m;
        j["numerator"] = r.c_m.get_num().get_str();
        j["denominator"] = r.c_m.get_den().get_str();
        arr.push_back(std::move(j));
      }
      return arr.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "m,numerator,denominator\n";
      for (const auto& r : rows) {
        out << r.m << ',' << r.c_m.get_num() << ',' << r.c_m.get_den() << '\n';
      }
      return out.str();
    }
    case OutputFormat::text: {
      std::ostringstream out;
      for (const auto& r : rows) {
        out << "c_" << r.m << " = " << r.c_m << '\n';
      }
      return out.str();
    }
  }
  throw std::logic_error("format_cm_table: unreachable");
}

std::string format_apery_table(const AperyTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      json arr = json::array();
      for (long n = 0; n <= table.max_index(); ++n) {
        arr.push_back(table.at(n).get_str());
      }
      return arr.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "n,value\n";
      for (long n = 0; n <= table.max_index(); ++n) {
        out << n << ',' << table.at(n) << '\n';
      }
      return out.str();
    }
    case OutputFormat::text: {
      std::ostringstream out;
      for (long n = 0; n <= table.max_index(); ++n) {
        out << n << ' ' << table.at(n) << '\n';
      }
      return out.str();
    }
  }
  throw std::logic_error("format_apery_table: unreachable");
}

}  // namespace apery
