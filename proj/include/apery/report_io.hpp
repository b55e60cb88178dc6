#pragma once

#include <string>
#include <vector>

#include "apery/polyreduce.hpp"
#include "apery/sequences.hpp"
#include "apery/verify.hpp"

namespace apery {

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& name);

// JSON: array of objects with keys check, params, modulus, lhs, rhs,
// diff_valuation ("inf" or integer), pass, plus error when a check could not
// be evaluated. Big integers are decimal strings. Output is canonical:
// parsing and re-serializing reproduces it byte for byte.
std::string format_reports(const std::vector<CongruenceReport>& reports,
                           OutputFormat format);

// CSV header: m,numerator,denominator. Signs carried on the numerator.
std::string format_cm_table(const std::vector<ReductionResult>& rows,
                            OutputFormat format);

std::string format_apery_table(const AperyTable& table, OutputFormat format);

}  // namespace apery
