#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "qcms/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<qcms::GaussianRational> : GenericNumTraits<qcms::GaussianRational> {
  typedef qcms::GaussianRational Real;
  typedef qcms::GaussianRational NonInteger;
  typedef qcms::GaussianRational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 80
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qcms {

using ExactMatrix = Eigen::Matrix<GaussianRational, Eigen::Dynamic, Eigen::Dynamic>;
using ExactVector = Eigen::Matrix<GaussianRational, Eigen::Dynamic, 1>;

// In-place reduced row echelon form with deterministic first-nonzero pivoting
// (no magnitude comparisons; valid over any exact field). Returns the pivot
// column of each of the leading rank rows; rows below the rank are zero.
inline std::vector<int> reduced_row_echelon(ExactMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = -1;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r)
      for (Eigen::Index j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    GaussianRational inv = m(r, c).inverse();
    for (Eigen::Index j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      GaussianRational f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

inline int exact_rank(ExactMatrix m) {
  return static_cast<int>(reduced_row_echelon(m).size());
}

// Dimension of the kernel of the linear map whose matrix rows are the images
// of the domain basis vectors.
inline int map_kernel_dimension(const ExactMatrix& images) {
  ExactMatrix m = images;
  return static_cast<int>(m.rows()) - static_cast<int>(reduced_row_echelon(m).size());
}

struct LinearSolution {
  bool solvable = false;
  bool unique = false;
  ExactVector x;
};

// Exact solve of A x = b.
inline LinearSolution solve_exact(const ExactMatrix& a, const ExactVector& b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  ExactMatrix aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  std::vector<int> pivots = reduced_row_echelon(aug);
  LinearSolution out;
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return out;  // inconsistent
  out.solvable = true;
  out.unique = static_cast<Eigen::Index>(pivots.size()) == cols;
  out.x = ExactVector::Constant(cols, GaussianRational(0));
  for (size_t r = 0; r < pivots.size(); ++r) out.x(pivots[r]) = aug(static_cast<Eigen::Index>(r), cols);
  return out;
}

}  // namespace qcms
