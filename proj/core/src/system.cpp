#include "mroot/system.hpp"

#include <Eigen/LU>

#include "mroot/error.hpp"

namespace mroot {

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kAffine: return "affine";
    case Mode::kToric: return "toric";
    case Mode::kProjective: return "projective";
    case Mode::kMultihom: return "multihom";
  }
  return "affine";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "affine" || text == "dense" || text == "affine-dense") return Mode::kAffine;
  if (text == "toric") return Mode::kToric;
  if (text == "projective") return Mode::kProjective;
  if (text == "multihom" || text == "multihomogeneous") return Mode::kMultihom;
  return std::nullopt;
}

namespace {

VariableBlocks default_blocks(Mode mode, int varcount) {
  switch (mode) {
    case Mode::kAffine:
    case Mode::kToric: return {{varcount}, false};
    case Mode::kProjective: return {{varcount - 1}, true};
    case Mode::kMultihom: break;
  }
  throw Error(ErrorKind::kInvalidArgument, "multihomogeneous systems need an explicit block structure");
}

}  // namespace

PolynomialSystem::PolynomialSystem(std::vector<Polynomial> polys, std::vector<std::string> variables,
                                   Mode mode, std::optional<VariableBlocks> blocks)
    : polys_(std::move(polys)), variables_(std::move(variables)), mode_(mode) {
  const int nvars = static_cast<int>(variables_.size());
  if (nvars < 1) throw Error(ErrorKind::kInvalidArgument, "system needs at least one variable");
  if (blocks) {
    blocks_ = *blocks;
    if (mode_ == Mode::kProjective && blocks_.block_count() != 1) {
      throw Error(ErrorKind::kInvalidArgument, "projective mode takes a single block");
    }
    if ((mode_ == Mode::kProjective || mode_ == Mode::kMultihom) != blocks_.homogeneous) {
      // Block sizes in the input are always projective dimensions n_i;
      // the flag follows the mode.
      blocks_.homogeneous = (mode_ == Mode::kProjective || mode_ == Mode::kMultihom);
    }
  } else {
    blocks_ = default_blocks(mode_, nvars);
  }
  for (int s : blocks_.sizes) {
    if (s < 1) throw Error(ErrorKind::kInvalidArgument, "block sizes must be positive");
  }
  if (blocks_.varcount() != nvars) {
    throw Error(ErrorKind::kInvalidArgument, "inconsistent blocks: layout needs " +
                                                 std::to_string(blocks_.varcount()) + " variables, " +
                                                 std::to_string(nvars) + " declared");
  }
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    const auto& p = polys_[i];
    if (p.nvars() != nvars) {
      throw Error(ErrorKind::kDimensionMismatch, "polynomial " + std::to_string(i + 1) + " has " +
                                                     std::to_string(p.nvars()) + " variables, system has " +
                                                     std::to_string(nvars));
    }
    if (p.is_zero()) {
      throw Error(ErrorKind::kZeroPolynomial, "polynomial " + std::to_string(i + 1) + " is the zero polynomial");
    }
    if (p.is_laurent() && mode_ != Mode::kToric) {
      throw Error(ErrorKind::kInvalidArgument, "negative exponents are only allowed in toric mode");
    }
    if (mode_ == Mode::kProjective && !is_homogeneous(p)) {
      throw Error(ErrorKind::kNotHomogeneous, "polynomial " + std::to_string(i + 1) + " is not homogeneous");
    }
    if (mode_ == Mode::kMultihom && !is_multihomogeneous(p, blocks_)) {
      throw Error(ErrorKind::kNotHomogeneous,
                  "polynomial " + std::to_string(i + 1) + " is not multihomogeneous for the declared blocks");
    }
  }
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    for (std::size_t j = i + 1; j < polys_.size(); ++j) {
      if (polys_[i] == polys_[j]) {
        throw Error(ErrorKind::kInvalidArgument, "polynomials " + std::to_string(i + 1) + " and " +
                                                     std::to_string(j + 1) + " are identical");
      }
    }
  }
}

void PolynomialSystem::require_square() const {
  if (!is_square()) {
    throw Error(ErrorKind::kNonSquare, "square system required: " + std::to_string(polys_.size()) +
                                           " polynomials in " + std::to_string(affine_dimension()) +
                                           " unknowns");
  }
}

std::vector<int> PolynomialSystem::degrees() const {
  std::vector<int> d;
  for (const auto& p : polys_) d.push_back(total_degree(p));
  return d;
}

std::vector<std::vector<int>> PolynomialSystem::multidegrees() const {
  std::vector<std::vector<int>> d;
  for (const auto& p : polys_) {
    if (mode_ == Mode::kMultihom) {
      d.push_back(multidegree(p, blocks_));
    } else {
      d.push_back({total_degree(p)});
    }
  }
  return d;
}

PolynomialSystem PolynomialSystem::with_mode(Mode mode, std::optional<VariableBlocks> blocks) const {
  return PolynomialSystem(polys_, variables_, mode, std::move(blocks));
}

PolynomialSystem PolynomialSystem::with_polys(std::vector<Polynomial> polys) const {
  return PolynomialSystem(std::move(polys), variables_, mode_, blocks_);
}

PolynomialSystem coordinate_change(const PolynomialSystem& system, const Eigen::MatrixXcd& transform) {
  const int n = system.varcount();
  if (transform.rows() != n || transform.cols() != n) {
    throw Error(ErrorKind::kDimensionMismatch, "coordinate change must be " + std::to_string(n) + "x" +
                                                   std::to_string(n));
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(transform);
  if (!lu.isInvertible()) throw Error(ErrorKind::kSingularTransform, "coordinate change is singular");
  if (system.mode() == Mode::kMultihom) {
    const auto& blocks = system.blocks();
    for (int b = 0; b < blocks.block_count(); ++b) {
      for (int i = blocks.begin(b); i < blocks.begin(b) + blocks.width(b); ++i) {
        for (int j = 0; j < n; ++j) {
          const bool same_block = j >= blocks.begin(b) && j < blocks.begin(b) + blocks.width(b);
          if (!same_block && transform(i, j) != Complex(0.0)) {
            throw Error(ErrorKind::kInvalidArgument, "multihomogeneous coordinate change must be block diagonal");
          }
        }
      }
    }
  }
  std::vector<Polynomial> polys;
  for (const auto& p : system.polys()) polys.push_back(substitute_linear(p, transform));
  return system.with_polys(std::move(polys));
}

}  // namespace mroot
