#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace hmin {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Pairwise summation with a fixed tree shape: the result depends only on the
// order of `v`, never on chunking or thread count. All grid reductions in the
// project go through this so reruns are bitwise identical.
inline double pairwise_sum(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = v[0];
    for (std::size_t i = 1; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

inline double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(std::span<const double>(v.data(), v.size()));
}

// One-dimensional first-derivative stencil, second order accurate.
// Offsets are in nodes along one axis; coefficients already include 1/h.
struct D1Stencil {
  int off[3];
  double c[3];
};

enum class D1Kind { Centered, Forward, Backward };

inline D1Stencil make_d1(D1Kind kind, double h) {
  switch (kind) {
    case D1Kind::Centered: return {{-1, 0, 1}, {-0.5 / h, 0.0, 0.5 / h}};
    case D1Kind::Forward:  return {{0, 1, 2}, {-1.5 / h, 2.0 / h, -0.5 / h}};
    default:               return {{0, -1, -2}, {1.5 / h, -2.0 / h, 0.5 / h}};
  }
}

// Picks centered if both neighbours are usable, otherwise a one-sided
// second-order stencil reaching two nodes into the usable side.
// `usable(k)` answers whether the node at offset k along the axis may be read.
inline std::optional<D1Kind> choose_d1(const std::function<bool(int)>& usable) {
  if (usable(-1) && usable(1)) return D1Kind::Centered;
  if (usable(1) && usable(2)) return D1Kind::Forward;
  if (usable(-1) && usable(-2)) return D1Kind::Backward;
  return std::nullopt;
}

inline bool nearly_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

// log2 of the ratio of successive residuals; the standard empirical order.
inline double observed_order(double coarse, double fine) {
  if (!(coarse > 0.0) || !(fine > 0.0)) return kNaN;
  return std::log2(coarse / fine);
}

}  // namespace hmin
