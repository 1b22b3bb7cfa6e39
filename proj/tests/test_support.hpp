#pragma once

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace testsup {

using Complex = std::complex<double>;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5ca77e12u);
  return gen;
}

inline Complex random_complex(std::mt19937_64& gen, double scale = 1.0) {
  std::uniform_real_distribution<double> d(-scale, scale);
  return {d(gen), d(gen)};
}

inline Eigen::VectorXcd random_vector(std::mt19937_64& gen, int n,
                                      double scale = 1.0) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v[i] = random_complex(gen, scale);
  return v;
}

inline Eigen::MatrixXcd random_matrix(std::mt19937_64& gen, int n,
                                      double scale = 1.0) {
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = random_complex(gen, scale);
  return m;
}

inline Eigen::MatrixXcd random_offdiagonal(std::mt19937_64& gen, int n,
                                           double scale = 1.0) {
  auto m = random_matrix(gen, n, scale);
  for (int i = 0; i < n; ++i) m(i, i) = 0.0;
  return m;
}

}  // namespace testsup
