#include "slant/interpolation.hpp"

#include <algorithm>

#include "slant/errors.hpp"

namespace slant {

namespace {

void require_increasing(const std::vector<double>& x, std::size_t min_count, const char* what) {
  if (x.size() < min_count) throw BadParams(std::string(what) + ": too few knots");
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) throw BadParams(std::string(what) + ": knots must be strictly increasing");
  }
}

std::size_t locate(const std::vector<double>& x, double t) {
  auto it = std::upper_bound(x.begin(), x.end(), t);
  std::size_t i = it == x.begin() ? 0 : static_cast<std::size_t>(it - x.begin()) - 1;
  return std::min(i, x.size() - 2);
}

}  // namespace

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
  require_increasing(x_, 2, "cubic spline");
  if (y_.size() != x_.size()) throw BadParams("cubic spline: knot and value counts differ");
  const std::size_t n = x_.size();
  m_.assign(n, 0.0);
  if (n < 3) return;
  // Tridiagonal system for interior second derivatives, natural ends (m = 0).
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), upper(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = x_[i] - x_[i - 1];
    const double h1 = x_[i + 1] - x_[i];
    diag[i] = 2.0 * (h0 + h1);
    upper[i] = h1;
    rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
  }
  for (std::size_t i = 2; i + 1 < n; ++i) {
    const double lower = x_[i] - x_[i - 1];
    const double w = lower / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
  }
}

std::size_t CubicSpline::segment(double t) const { return locate(x_, t); }

double CubicSpline::value(double t) const {
  const std::size_t i = segment(t);
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - t) / h;
  const double b = (t - x_[i]) / h;
  return a * y_[i] + b * y_[i + 1] + ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::derivative(double t) const {
  const std::size_t i = segment(t);
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - t) / h;
  const double b = (t - x_[i]) / h;
  return (y_[i + 1] - y_[i]) / h + ((1.0 - 3.0 * a * a) * m_[i] + (3.0 * b * b - 1.0) * m_[i + 1]) * h / 6.0;
}

double CubicSpline::second_derivative(double t) const {
  const std::size_t i = segment(t);
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - t) / h;
  const double b = (t - x_[i]) / h;
  return a * m_[i] + b * m_[i + 1];
}

std::vector<std::vector<double>> fd_weights(double x0, std::span<const double> x, int max_order) {
  const std::size_t n = x.size();
  std::vector<std::vector<double>> c(static_cast<std::size_t>(max_order) + 1, std::vector<double>(n, 0.0));
  if (n == 0) return c;
  double c1 = 1.0;
  double c4 = x[0] - x0;
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const int mn = std::min(static_cast<int>(i), max_order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        }
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      }
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c;
}

QuinticHermiteCurve::QuinticHermiteCurve(std::vector<double> u, std::vector<Vec3> values)
    : u_(std::move(u)), p_(std::move(values)) {
  constexpr std::size_t kStencil = 7;
  require_increasing(u_, kStencil, "quintic Hermite curve");
  if (p_.size() != u_.size()) throw BadParams("quintic Hermite curve: node and value counts differ");
  const std::size_t n = u_.size();
  d1_.resize(n);
  d2_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t first = std::clamp<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(i) - 3, 0,
                                                        static_cast<std::ptrdiff_t>(n - kStencil));
    const std::span<const double> window(u_.data() + first, kStencil);
    const auto w = fd_weights(u_[i], window, 2);
    Vec3 g1, g2;
    for (std::size_t k = 0; k < kStencil; ++k) {
      g1 += w[1][k] * p_[first + k];
      g2 += w[2][k] * p_[first + k];
    }
    d1_[i] = g1;
    d2_[i] = g2;
  }
}

Vec3 QuinticHermiteCurve::operator()(double u) const {
  const std::size_t i = locate(u_, u);
  const double h = u_[i + 1] - u_[i];
  const double t = (u - u_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double t4 = t3 * t;
  const double t5 = t4 * t;
  const double h0 = 1.0 - 10.0 * t3 + 15.0 * t4 - 6.0 * t5;
  const double h1 = t - 6.0 * t3 + 8.0 * t4 - 3.0 * t5;
  const double h2 = 0.5 * (t2 - 3.0 * t3 + 3.0 * t4 - t5);
  const double h3 = 0.5 * (t3 - 2.0 * t4 + t5);
  const double h4 = -4.0 * t3 + 7.0 * t4 - 3.0 * t5;
  const double h5 = 10.0 * t3 - 15.0 * t4 + 6.0 * t5;
  return h0 * p_[i] + (h * h1) * d1_[i] + (h * h * h2) * d2_[i] + (h * h * h3) * d2_[i + 1] +
         (h * h4) * d1_[i + 1] + h5 * p_[i + 1];
}

}  // namespace slant
