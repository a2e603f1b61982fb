#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <utility>

namespace ladderlab::detail {

/*
 * Truncated Taylor series in a local variable w, kept as plain coefficient
 * arrays: c[k] is the coefficient of w^k. Degree is fixed at construction;
 * every operation truncates back to that degree. This is all the machinery
 * the Riemann-Siegel correction terms need: compose sin/cos with a quadratic,
 * divide two series, deflate a simple zero, and recenter.
 */
class Series {
 public:
  static constexpr int kCap = 32;

  explicit Series(int n) : n_(n) { assert(n >= 1 && n <= kCap); }

  int size() const { return n_; }
  double operator[](int k) const { return k < n_ ? c_[k] : 0.0; }
  double& at(int k) {
    assert(k >= 0 && k < n_);
    return c_[k];
  }

  // k-th derivative at the expansion point: k! * c[k].
  double derivative(int k) const {
    double f = 1.0;
    for (int j = 2; j <= k; ++j) f *= j;
    return f * (*this)[k];
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series r(a.n_);
    for (int k = 0; k < r.n_; ++k) r.c_[k] = a[k] + b[k];
    return r;
  }

  friend Series operator-(const Series& a, const Series& b) {
    Series r(a.n_);
    for (int k = 0; k < r.n_; ++k) r.c_[k] = a[k] - b[k];
    return r;
  }

  friend Series operator*(double s, const Series& a) {
    Series r(a.n_);
    for (int k = 0; k < r.n_; ++k) r.c_[k] = s * a[k];
    return r;
  }

  friend Series operator*(const Series& a, const Series& b) {
    Series r(a.n_);
    for (int k = 0; k < r.n_; ++k) {
      double acc = 0.0;
      for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
      r.c_[k] = acc;
    }
    return r;
  }

  // sin(u) and cos(u) for a series u with arbitrary constant term, by the
  // joint recurrence  n*s_n = sum k*u_k*c_{n-k},  n*c_n = -sum k*u_k*s_{n-k}.
  static std::pair<Series, Series> sin_cos_of(const Series& u) {
    Series s(u.n_), c(u.n_);
    s.c_[0] = std::sin(u[0]);
    c.c_[0] = std::cos(u[0]);
    for (int n = 1; n < u.n_; ++n) {
      double as = 0.0, ac = 0.0;
      for (int k = 1; k <= n; ++k) {
        as += k * u[k] * c[n - k];
        ac += k * u[k] * s[n - k];
      }
      s.c_[n] = as / n;
      c.c_[n] = -ac / n;
    }
    return {s, c};
  }

  // num/den with den[0] != 0.
  static Series divide(const Series& num, const Series& den) {
    assert(den[0] != 0.0);
    Series q(num.n_);
    for (int k = 0; k < q.n_; ++k) {
      double acc = num[k];
      for (int j = 1; j <= k; ++j) acc -= den[j] * q[k - j];
      q.c_[k] = acc / den[0];
    }
    return q;
  }

  // Divide by w: valid when the series has a zero at w = 0 (c[0] ~ 0 up to
  // roundoff). The constant coefficient is dropped, everything shifts down.
  Series deflate() const {
    Series r(n_ - 1);
    for (int k = 0; k + 1 < n_; ++k) r.c_[k] = c_[k + 1];
    return r;
  }

  // Recenter: coefficients of p(w + d) as a polynomial in w (synthetic
  // division, exact for polynomials up to roundoff).
  Series shifted(double d) const {
    Series r = *this;
    for (int k = 0; k < n_ - 1; ++k)
      for (int j = n_ - 2; j >= k; --j) r.c_[j] += d * r.c_[j + 1];
    return r;
  }

 private:
  int n_;
  std::array<double, kCap> c_{};
};

}  // namespace ladderlab::detail
