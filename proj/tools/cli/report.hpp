#pragma once

#include <string>
#include <vector>

#include "cli/json.hpp"
#include "mroot/macaulay.hpp"
#include "mroot/roots.hpp"

namespace mroot::cli {

struct ReportOptions {
  bool residuals = false;  // residual column in CSV output
};

// {mode, seed, delta, roots: [{coords: [{re, im}], blocks?, affine?,
// multiplicity, residual}], timings, diagnostics, warnings}
nlohmann::json to_json(const RootSet& roots);
std::string to_csv(const RootSet& roots, const std::vector<std::string>& variables, const ReportOptions& options);

// Problems found in a solve report; empty when it matches the schema.
std::vector<std::string> validate_report(const nlohmann::json& report);

// Header "monomial" followed by the quoted column labels; one row per
// monomial with entries written as a+bi.
std::string matrix_csv(const MacaulayMatrix& M, const std::vector<std::string>& variables);

}  // namespace mroot::cli
