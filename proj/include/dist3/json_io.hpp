#pragma once

#include <string>
#include <vector>

#include "dist3/distribution.hpp"
#include "dist3/qpoly.hpp"

namespace dist3 {

// Form input, either of:
//   { "degree": d, "plucker": {"01": "...", "02": "...", "03": "...",
//                              "12": "...", "13": "...", "23": "..."} }
//   { "degree": d, "coefficients": ["A0", "A1", "A2", "A3"] }
// with polynomial strings in the x0..x3 grammar.
struct FormSpec {
  int degree = 0;
  bool has_plucker = false;
  std::array<std::string, 6> plucker;      // 01 02 03 12 13 23
  std::array<std::string, 4> coefficients;  // A0..A3
};

FormSpec form_spec_from_json(const std::string& json_text);
std::string form_spec_to_json(const FormSpec& spec);

// Builds the form over the requested field and runs the analysis pipeline.
DistributionReport analyze_form_json(const std::string& form_json, const AnalyzeOptions& opts);

std::string report_to_json(const DistributionReport& report, int indent = 2);

// Ideals serialize as JSON lists of polynomial strings.
std::vector<std::string> ideal_strings_from_json(const std::string& json_text);

// Hilbert polynomial of the quotient by the ideal in the JSON file, e.g.
// "3*t + 1" for the twisted cubic.
QPoly hilbert_polynomial_of_ideal_json(const std::string& json_text, const AnalyzeOptions& opts);

std::string moduli_derivation_to_json(int indent = 2);

}  // namespace dist3
