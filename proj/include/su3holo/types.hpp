#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace su3holo {

using Complex = std::complex<double>;

/// Real 8-component coordinate of a traceless Hermitian 3x3 matrix in the
/// Gell-Mann basis.
using Octet = Eigen::Matrix<double, 8, 1>;
using Matrix3c = Eigen::Matrix3cd;
using Matrix8 = Eigen::Matrix<double, 8, 8>;

/// Energy level label, ordered by nonincreasing eigenvalue.
enum class Level : int { One = 1, Two = 2, Three = 3 };

inline constexpr std::array<Level, 3> kLevels{Level::One, Level::Two, Level::Three};

/// Zero-based column index of a level.
constexpr int index(Level a) { return static_cast<int>(a) - 1; }

inline Level level_from_int(int a) {
  if (a < 1 || a > 3) {
    throw std::invalid_argument("level must be 1, 2 or 3, got " + std::to_string(a));
  }
  return static_cast<Level>(a);
}

inline Octet unit_octet(int r) {
  if (r < 1 || r > 8) throw std::invalid_argument("octet index out of range");
  Octet e = Octet::Zero();
  e(r - 1) = 1.0;
  return e;
}

}  // namespace su3holo
