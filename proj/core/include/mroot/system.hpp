#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "mroot/poly.hpp"

namespace mroot {

enum class Mode { kAffine, kToric, kProjective, kMultihom };

std::string_view to_string(Mode mode);
// Accepts affine, dense, affine-dense, toric, projective, multihom.
std::optional<Mode> parse_mode(std::string_view text);

// A square or non-square polynomial system over named variables. The
// constructor validates the variable/block layout, rejects zero
// polynomials, and in projective/multihom mode checks (multi)homogeneity.
class PolynomialSystem {
 public:
  PolynomialSystem(std::vector<Polynomial> polys, std::vector<std::string> variables,
                   Mode mode, std::optional<VariableBlocks> blocks = std::nullopt);

  const std::vector<Polynomial>& polys() const { return polys_; }
  const Polynomial& poly(std::size_t i) const { return polys_[i]; }
  std::size_t size() const { return polys_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const VariableBlocks& blocks() const { return blocks_; }
  Mode mode() const { return mode_; }

  int varcount() const { return static_cast<int>(variables_.size()); }
  // Number of affine unknowns: varcount in affine/toric mode, varcount
  // minus the number of blocks in projective/multihom mode.
  int affine_dimension() const { return blocks_.affine_dimension(); }

  bool is_square() const { return static_cast<int>(polys_.size()) == affine_dimension(); }
  // Throws kNonSquare with "square system required".
  void require_square() const;

  // Total degree of each polynomial.
  std::vector<int> degrees() const;
  // Per-block degrees of each polynomial (one block in non-multihom mode).
  std::vector<std::vector<int>> multidegrees() const;

  // Same polynomials reinterpreted in another mode.
  PolynomialSystem with_mode(Mode mode, std::optional<VariableBlocks> blocks = std::nullopt) const;
  PolynomialSystem with_polys(std::vector<Polynomial> polys) const;

 private:
  std::vector<Polynomial> polys_;
  std::vector<std::string> variables_;
  VariableBlocks blocks_;
  Mode mode_;
};

// Composes every polynomial with x -> T x. T must be invertible; for a
// multihomogeneous system it must also be block diagonal.
PolynomialSystem coordinate_change(const PolynomialSystem& system, const Eigen::MatrixXcd& transform);

}  // namespace mroot
