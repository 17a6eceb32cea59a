#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mroot/poly.hpp"
#include "mroot/system.hpp"

namespace mroot::cli {

// Line-oriented system description:
//
//   # comment
//   vars: x1 x2
//   mode: affine            (optional, default affine)
//   blocks: 1,1             (optional, multihom)
//   f: 2*x1^2 + (1.5-2i)*x1*x2 - 3
//
// `i` is the imaginary unit and cannot name a variable. Overrides replace
// the header values. Throws ParseError with line and column.
PolynomialSystem parse_system(std::string_view text, std::optional<Mode> mode = std::nullopt,
                              std::optional<VariableBlocks> blocks = std::nullopt);

// Parses one expression over the given variables; `line` is used for
// error positions.
Polynomial parse_polynomial(std::string_view expr, const std::vector<std::string>& variables, int line = 1);

std::string format_number(double v);
std::string format_complex(Complex c);
std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& variables);
// Inverse of parse_system on canonical input.
std::string format_system(const PolynomialSystem& system);

std::string read_file(const std::string& path);

}  // namespace mroot::cli
