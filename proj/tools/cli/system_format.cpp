#include "cli/system_format.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mroot/error.hpp"

namespace mroot::cli {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::vector<std::string>& vars, int line, int column_offset)
      : text_(text), vars_(vars), line_(line), offset_(column_offset) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, offset_ + static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int nvars() const { return static_cast<int>(vars_.size()); }

  Polynomial expression() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected an expression");
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    skip_space();
    if (pos_ < text_.size() && (is_ident_start(text_[pos_]) || std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                text_[pos_] == '(')) {
      fail("expected an operator");
    }
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      bool negative = false;
      if (pos_ < text_.size() && text_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      int k = 0;
      const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), k);
      if (ec != std::errc() || ptr == text_.data() + pos_) {
        pos_ = start;
        fail("expected an integer exponent");
      }
      pos_ = static_cast<std::size_t>(ptr - text_.data());
      try {
        return base.pow(negative ? -k : k);
      } catch (const Error& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "i") return Polynomial::constant(nvars(), Complex(0.0, 1.0));
      for (int v = 0; v < nvars(); ++v) {
        if (vars_[v] == name) return Polynomial::variable(nvars(), v);
      }
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Polynomial number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    if (pos_ + 1 < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      if (text_[q] == '+' || text_[q] == '-') ++q;
      if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
        pos_ = q;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    const std::string literal(text_.substr(start, pos_ - start));
    double value = 0.0;
    std::size_t used = 0;
    try {
      value = std::stod(literal, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != literal.size()) {
      pos_ = start;
      fail("malformed number '" + literal + "'");
    }
    // "2i" is an imaginary literal.
    if (pos_ < text_.size() && text_[pos_] == 'i' &&
        (pos_ + 1 >= text_.size() || !is_ident_char(text_[pos_ + 1]))) {
      ++pos_;
      return Polynomial::constant(nvars(), Complex(0.0, value));
    }
    return Polynomial::constant(nvars(), value);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

struct Line {
  int number;
  std::string_view key;
  std::string_view value;
  int value_column;  // 0-based column of value start
};

std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  std::string current;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<int> parse_blocks(const Line& l) {
  std::vector<int> sizes;
  for (const auto& item : split_names(l.value)) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size() || v < 1) {
      throw ParseError("block sizes must be positive integers", l.number, l.value_column + 1);
    }
    sizes.push_back(v);
  }
  if (sizes.empty()) throw ParseError("empty block list", l.number, l.value_column + 1);
  return sizes;
}

}  // namespace

Polynomial parse_polynomial(std::string_view expr, const std::vector<std::string>& variables, int line) {
  return ExprParser(expr, variables, line, 0).parse();
}

PolynomialSystem parse_system(std::string_view text, std::optional<Mode> mode, std::optional<VariableBlocks> blocks) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (!trim(raw).empty()) {
      const auto colon = raw.find(':');
      if (colon == std::string_view::npos) {
        const auto first = raw.find_first_not_of(" \t");
        throw ParseError("expected 'key: value'", number, static_cast<int>(first) + 1);
      }
      Line l;
      l.number = number;
      l.key = trim(raw.substr(0, colon));
      std::size_t v = colon + 1;
      while (v < raw.size() && std::isspace(static_cast<unsigned char>(raw[v]))) ++v;
      l.value = trim(raw.substr(v));
      l.value_column = static_cast<int>(v);
      lines.push_back(l);
    }
    start = end + 1;
  }

  std::vector<std::string> vars;
  std::optional<Mode> file_mode;
  std::optional<std::vector<int>> file_blocks;
  std::vector<Polynomial> polys;
  bool have_vars = false;
  for (const auto& l : lines) {
    if (l.key == "vars") {
      if (have_vars) throw ParseError("duplicate 'vars' line", l.number, 1);
      vars = split_names(l.value);
      if (vars.empty()) throw ParseError("no variables declared", l.number, l.value_column + 1);
      for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto& v = vars[i];
        if (!is_ident_start(v[0]) || !std::all_of(v.begin(), v.end(), is_ident_char)) {
          throw ParseError("invalid variable name '" + v + "'", l.number, l.value_column + 1);
        }
        if (v == "i") throw ParseError("'i' is the imaginary unit and cannot be a variable", l.number, l.value_column + 1);
        for (std::size_t j = 0; j < i; ++j) {
          if (vars[j] == v) throw ParseError("duplicate variable '" + v + "'", l.number, l.value_column + 1);
        }
      }
      have_vars = true;
    } else if (l.key == "mode") {
      file_mode = parse_mode(l.value);
      if (!file_mode) throw ParseError("unknown mode '" + std::string(l.value) + "'", l.number, l.value_column + 1);
    } else if (l.key == "blocks") {
      file_blocks = parse_blocks(l);
    } else if (l.key == "f") {
      if (!have_vars) throw ParseError("'f' before 'vars'", l.number, 1);
      Polynomial p = ExprParser(l.value, vars, l.number, l.value_column).parse();
      if (p.is_zero()) throw ParseError("zero polynomial", l.number, l.value_column + 1);
      polys.push_back(std::move(p));
    } else {
      throw ParseError("unknown key '" + std::string(l.key) + "'", l.number, 1);
    }
  }
  if (!have_vars) throw ParseError("missing 'vars' line", number, 1);
  if (polys.empty()) throw ParseError("no polynomials", number, 1);

  const Mode m = mode.value_or(file_mode.value_or(Mode::kAffine));
  std::optional<VariableBlocks> layout = blocks;
  if (!layout && file_blocks) layout = VariableBlocks{*file_blocks, m == Mode::kProjective || m == Mode::kMultihom};
  return PolynomialSystem(std::move(polys), std::move(vars), m, layout);
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex c) {
  std::string s = format_number(c.real());
  const double im = c.imag();
  s += std::signbit(im) ? "-" : "+";
  s += format_number(std::abs(im));
  s += "i";
  return s;
}

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& variables) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const Complex c = it->coefficient;
    const bool constant = degree(it->exponents) == 0 &&
                          std::all_of(it->exponents.begin(), it->exponents.end(), [](int e) { return e == 0; });
    std::string monomial;
    for (std::size_t v = 0; v < it->exponents.size(); ++v) {
      const int e = it->exponents[v];
      if (e == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += variables[v];
      if (e != 1) monomial += "^" + std::to_string(e);
    }
    std::string coef;
    bool negative = false;
    if (c.imag() != 0.0) {
      coef = "(" + format_complex(c) + ")";
    } else {
      negative = std::signbit(c.real());
      const double a = std::abs(c.real());
      if (a != 1.0 || constant) coef = format_number(a);
    }
    std::string piece = coef;
    if (!monomial.empty()) piece += (piece.empty() ? "" : "*") + monomial;
    if (out.empty()) {
      out = (negative ? "-" : "") + piece;
    } else {
      out += negative ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

std::string format_system(const PolynomialSystem& system) {
  std::ostringstream os;
  os << "vars:";
  for (const auto& v : system.variables()) os << ' ' << v;
  os << "\nmode: " << to_string(system.mode()) << '\n';
  if (system.mode() == Mode::kMultihom || system.blocks().block_count() > 1) {
    os << "blocks: ";
    const auto& sizes = system.blocks().sizes;
    for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
    os << '\n';
  }
  for (const auto& p : system.polys()) os << "f: " << format_polynomial(p, system.variables()) << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mroot::cli
