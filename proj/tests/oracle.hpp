// Test-only helpers: random inputs from std::mt19937_64 and dense reference
// computations through Eigen, independent of the library's own kernels.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "ulp/channel.hpp"
#include "ulp/numerics.hpp"

namespace ulp::testing {

using EigenMatrix = Eigen::MatrixXcd;

inline EigenMatrix to_eigen(const ComplexMatrix& a) {
  EigenMatrix out(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = a(r, c);
    }
  }
  return out;
}

inline ComplexMatrix from_eigen(const EigenMatrix& a) {
  ComplexMatrix out(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(a.cols()));
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = a(r, c);
    }
  }
  return out;
}

/// Frobenius norm of the difference, computed in Eigen.
inline double distance(const ComplexMatrix& a, const EigenMatrix& b) {
  return (to_eigen(a) - b).norm();
}

inline double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (to_eigen(a) - to_eigen(b)).norm();
}

/// Entries CN(0, 1) from a standard-library engine.
inline ComplexMatrix random_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  ComplexMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = {g(gen), g(gen)};
  }
  return a;
}

inline ChannelMatrix random_channel(std::mt19937_64& gen, std::size_t users,
                                    std::size_t antennas) {
  return full_channel(random_matrix(gen, users, antennas));
}

}  // namespace ulp::testing
