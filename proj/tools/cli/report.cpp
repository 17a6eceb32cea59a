#include "cli/report.hpp"

#include <sstream>

#include "cli/system_format.hpp"

namespace mroot::cli {

namespace {

using nlohmann::json;

json complex_json(Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

json complex_array(std::span<const Complex> values) {
  json a = json::array();
  for (const auto& c : values) a.push_back(complex_json(c));
  return a;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool is_complex(const json& v) {
  return v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im") && v["re"].is_number() &&
         v["im"].is_number();
}

bool is_complex_array(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& c) { return is_complex(c); });
}

}  // namespace

json to_json(const RootSet& set) {
  json j;
  j["mode"] = std::string(to_string(set.mode));
  j["seed"] = set.seed;
  j["delta"] = set.delta;
  json roots = json::array();
  const bool homogeneous = set.mode == Mode::kProjective || set.mode == Mode::kMultihom;
  for (const auto& r : set.roots) {
    json root;
    root["coords"] = complex_array(r.coords);
    if (homogeneous) {
      json blocks = json::array();
      for (int b = 0; b < set.blocks.block_count(); ++b) {
        blocks.push_back(complex_array(std::span(r.coords).subspan(set.blocks.begin(b), set.blocks.width(b))));
      }
      root["blocks"] = std::move(blocks);
      if (r.affine) root["affine"] = complex_array(*r.affine);
    }
    root["multiplicity"] = r.multiplicity;
    root["residual"] = r.residual;
    roots.push_back(std::move(root));
  }
  j["roots"] = std::move(roots);
  j["timings"] = {{"t_M", set.timings.t_M},
                  {"t_N", set.timings.t_N},
                  {"t_B", set.timings.t_B},
                  {"t_S", set.timings.t_S},
                  {"t_alg", set.timings.t_alg}};
  const auto& d = set.diagnostics;
  j["diagnostics"] = {{"cond_nstar", d.cond},
                      {"singular_value_gap", d.gap},
                      {"null_space_residual", d.null_residual},
                      {"commutator", d.commutator},
                      {"schur_unitarity", d.schur_unitarity},
                      {"schur_residual", d.schur_residual},
                      {"triangularity", d.triangularity},
                      {"macaulay_rows", d.macaulay_rows},
                      {"macaulay_columns", d.macaulay_columns},
                      {"clusters", d.clusters}};
  j["warnings"] = set.warnings;
  return j;
}

std::string to_csv(const RootSet& set, const std::vector<std::string>& variables, const ReportOptions& options) {
  std::ostringstream os;
  os << "multiplicity";
  for (const auto& v : variables) os << ',' << v << "_re," << v << "_im";
  if (options.residuals) os << ",residual";
  os << '\n';
  for (const auto& r : set.roots) {
    os << r.multiplicity;
    for (const auto& c : r.coords) os << ',' << format_number(c.real()) << ',' << format_number(c.imag());
    if (options.residuals) os << ',' << format_number(r.residual);
    os << '\n';
  }
  return os.str();
}

std::vector<std::string> validate_report(const json& j) {
  std::vector<std::string> errors;
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) errors.push_back(what);
    return ok;
  };
  if (!require(j.is_object(), "report is not an object")) return errors;
  if (require(j.contains("mode") && j["mode"].is_string(), "mode missing or not a string")) {
    require(parse_mode(j["mode"].get<std::string>()).has_value(), "unknown mode");
  }
  require(j.contains("seed") && j["seed"].is_number_unsigned(), "seed missing or not an unsigned integer");
  const bool delta_ok = require(j.contains("delta") && j["delta"].is_number_integer() && j["delta"].get<long>() >= 1,
                                "delta missing or not a positive integer");
  if (require(j.contains("roots") && j["roots"].is_array(), "roots missing or not an array")) {
    long total = 0;
    for (std::size_t i = 0; i < j["roots"].size(); ++i) {
      const auto& r = j["roots"][i];
      const std::string at = "roots[" + std::to_string(i) + "]: ";
      if (!require(r.is_object(), at + "not an object")) continue;
      require(r.contains("coords") && is_complex_array(r["coords"]) && !r["coords"].empty(),
              at + "coords must be a nonempty array of {re, im}");
      if (require(r.contains("multiplicity") && r["multiplicity"].is_number_integer() &&
                      r["multiplicity"].get<long>() >= 1,
                  at + "multiplicity must be a positive integer")) {
        total += r["multiplicity"].get<long>();
      }
      require(r.contains("residual") && r["residual"].is_number() && r["residual"].get<double>() >= 0.0,
              at + "residual must be a nonnegative number");
      if (r.contains("blocks")) {
        require(r["blocks"].is_array() &&
                    std::all_of(r["blocks"].begin(), r["blocks"].end(), [](const json& b) { return is_complex_array(b); }),
                at + "blocks must be arrays of {re, im}");
      }
      if (r.contains("affine")) require(is_complex_array(r["affine"]), at + "affine must be an array of {re, im}");
      for (const auto& [key, value] : r.items()) {
        require(key == "coords" || key == "blocks" || key == "affine" || key == "multiplicity" || key == "residual",
                at + "unexpected field '" + key + "'");
      }
    }
    if (delta_ok) require(total == j["delta"].get<long>(), "multiplicities do not add up to delta");
  }
  if (require(j.contains("timings") && j["timings"].is_object(), "timings missing")) {
    for (const char* key : {"t_M", "t_N", "t_B", "t_S", "t_alg"}) {
      require(j["timings"].contains(key) && j["timings"][key].is_number(), std::string("timings.") + key + " missing");
    }
  }
  require(j.contains("diagnostics") && j["diagnostics"].is_object(), "diagnostics missing");
  if (j.contains("warnings")) {
    require(j["warnings"].is_array() &&
                std::all_of(j["warnings"].begin(), j["warnings"].end(), [](const json& w) { return w.is_string(); }),
            "warnings must be an array of strings");
  }
  return errors;
}

std::string matrix_csv(const MacaulayMatrix& M, const std::vector<std::string>& variables) {
  std::ostringstream os;
  os << "monomial";
  for (const auto& c : M.columns) os << ',' << quote(column_label(c, variables));
  os << '\n';
  for (std::size_t r = 0; r < M.rows.size(); ++r) {
    os << monomial_string(M.rows[r], variables);
    for (long c = 0; c < M.entries.cols(); ++c) os << ',' << format_complex(M.entries(static_cast<long>(r), c));
    os << '\n';
  }
  return os.str();
}

}  // namespace mroot::cli
