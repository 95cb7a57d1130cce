#pragma once

#include <Eigen/Dense>

#include <optional>

#include "symorb/scalars.hpp"

namespace symorb {

using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_zero(const RatVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

inline bool is_zero(const RatMat& m) {
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, c) != 0) return false;
  return true;
}

inline bool equal(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline bool equal(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

// With a zero epsilon the LU rank counts exactly nonzero pivots.
inline Eigen::Index rank_exact(const RatMat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return Eigen::FullPivLU<RatMat>(m).rank();
}

// Solves A x = b exactly; empty when the system is inconsistent.
inline std::optional<RatVec> solve_exact(const RatMat& A, const RatVec& b) {
  Eigen::FullPivLU<RatMat> lu(A);
  RatVec x = lu.solve(b);
  RatVec residual = A * x - b;
  for (Eigen::Index i = 0; i < residual.size(); ++i)
    if (residual[i] != 0) return std::nullopt;
  return x;
}

// Solves A X = B exactly, column by column; throws when inconsistent.
inline RatMat solve_exact_matrix(const RatMat& A, const RatMat& B) {
  Eigen::FullPivLU<RatMat> lu(A);
  RatMat X = lu.solve(B);
  RatMat residual = A * X - B;
  for (Eigen::Index c = 0; c < residual.cols(); ++c)
    for (Eigen::Index r = 0; r < residual.rows(); ++r)
      if (residual(r, c) != 0)
        throw std::logic_error("exact linear solve: inconsistent system");
  return X;
}

}  // namespace symorb
