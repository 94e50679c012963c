#pragma once

// Truncated formal power series over the rationals, plus the bivariate
// variant whose coefficients are polynomials in a marking variable q.
// Everything is exact; truncation order is explicit and binary operations
// insist both operands carry the same order so silent precision loss is
// impossible.  Division handles a common valuation by shifting both
// operands down (the result then has correspondingly lower order), and
// reports any genuinely inexact division instead of rounding.

#include "hassepaths/numbers.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hassepaths {

// ---------------------------------------------------------------------------
// Univariate: Σ a_n x^n known through x^order.

class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : order_(check_order(order)), c_(order + 1) {}

  TruncatedSeries(int order, std::vector<Rational> coeffs)
      : order_(check_order(order)), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) > order_ + 1)
      throw std::invalid_argument("TruncatedSeries: more coefficients than order allows");
    c_.resize(order_ + 1);
  }

  // The polynomial c0 + c1 x + ... regarded as a series of the given order.
  static TruncatedSeries polynomial(std::vector<Rational> coeffs, int order) {
    return TruncatedSeries(order, std::move(coeffs));
  }

  static TruncatedSeries monomial(const Rational& a, int k, int order) {
    TruncatedSeries s(order);
    if (k < 0 || k > order) throw std::invalid_argument("monomial exponent out of range");
    s.c_[k] = a;
    return s;
  }

  int order() const { return order_; }

  const Rational& coefficient(int n) const {
    if (n < 0 || n > order_) throw std::out_of_range("series coefficient beyond truncation order");
    return c_[n];
  }

  void set_coefficient(int n, Rational v) {
    if (n < 0 || n > order_) throw std::out_of_range("series coefficient beyond truncation order");
    c_[n] = std::move(v);
  }

  // Index of the first nonzero coefficient; -1 when all stored ones vanish.
  int valuation() const {
    for (int i = 0; i <= order_; ++i)
      if (c_[i] != 0) return i;
    return -1;
  }

  TruncatedSeries truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("cannot raise truncation order");
    TruncatedSeries s(new_order);
    std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
    return s;
  }

  bool operator==(const TruncatedSeries& o) const = default;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_order(a, b, "+");
    TruncatedSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_order(a, b, "-");
    TruncatedSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) r.c_[i] = -a.c_[i];
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_order(a, b, "*");
    TruncatedSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; i + j <= a.order_; ++j) {
        if (b.c_[j] == 0) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& a) {
    TruncatedSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) r.c_[i] = s * a.c_[i];
    return r;
  }

  std::string str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= order_; ++i) {
      if (c_[i] == 0) continue;
      if (!first) out << " + ";
      out << to_fraction(c_[i]);
      if (i >= 1) out << "*x" << (i > 1 ? "^" + std::to_string(i) : "");
      first = false;
    }
    if (first) out << "0";
    out << " + O(x^" << order_ + 1 << ")";
    return out.str();
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    return order;
  }
  static void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b,
                               const char* op) {
    if (a.order_ != b.order_)
      throw std::invalid_argument(std::string("series order mismatch in ") + op);
  }

  int order_;
  std::vector<Rational> c_;
};

// a/b where b may start with zero coefficients: both operands are shifted
// down by the valuation v of b (a must vanish there too), and the quotient
// is exact to order min(order(a), order(b)) - v.
inline TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int v = b.valuation();
  if (v < 0) throw std::domain_error("series division by zero");
  for (int i = 0; i < v && i <= a.order(); ++i)
    if (a.coefficient(i) != 0)
      throw std::domain_error("inexact series division: numerator valuation too small");
  const int n = std::min(a.order(), b.order()) - v;
  if (n < 0) throw std::invalid_argument("series division: no coefficients survive the shift");
  TruncatedSeries q(n);
  const Rational& b0 = b.coefficient(v);
  for (int i = 0; i <= n; ++i) {
    Rational acc = a.coefficient(i + v);
    for (int k = 0; k < i; ++k) acc -= q.coefficient(k) * b.coefficient(i - k + v);
    q.set_coefficient(i, acc / b0);
  }
  return q;
}

// Square root of a series with constant term 1 (the only case needed here).
inline TruncatedSeries sqrt(const TruncatedSeries& a) {
  if (a.coefficient(0) != 1)
    throw std::domain_error("series sqrt requires constant term 1");
  TruncatedSeries s(a.order());
  s.set_coefficient(0, 1);
  for (int i = 1; i <= a.order(); ++i) {
    Rational acc = a.coefficient(i);
    for (int k = 1; k < i; ++k) acc -= s.coefficient(k) * s.coefficient(i - k);
    s.set_coefficient(i, acc / 2);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Polynomials in the marking variable q, with rational coefficients.

class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(const Rational& constant) { c_.push_back(constant); trim(); }  // NOLINT: implicit by design
  QPolynomial(long long constant) : QPolynomial(Rational(constant)) {}       // NOLINT
  explicit QPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPolynomial q() { return QPolynomial(std::vector<Rational>{0, 1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

  Rational coefficient(int j) const {
    if (j < 0) throw std::out_of_range("negative q-exponent");
    return j < static_cast<int>(c_.size()) ? c_[j] : Rational(0);
  }

  bool operator==(const QPolynomial& o) const = default;

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
      if (i < a.c_.size()) c[i] += a.c_[i];
      if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return QPolynomial(std::move(c));
  }

  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
      if (i < a.c_.size()) c[i] += a.c_[i];
      if (i < b.c_.size()) c[i] -= b.c_[i];
    }
    return QPolynomial(std::move(c));
  }

  friend QPolynomial operator-(const QPolynomial& a) { return QPolynomial(0) - a; }

  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return QPolynomial(std::move(c));
  }

  // d/dq.
  QPolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t j = 1; j < c_.size(); ++j) d[j - 1] = Rational(j) * c_[j];
    return QPolynomial(std::move(d));
  }

  Rational evaluate(const Rational& x) const {
    Rational r = 0;
    for (size_t j = c_.size(); j-- > 0;) r = r * x + c_[j];
    return r;
  }

  // Exact polynomial quotient; throws if b does not divide a.
  friend QPolynomial exact_div(QPolynomial a, const QPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("q-polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree())
      throw std::logic_error("inexact q-polynomial division");
    std::vector<Rational> q(a.degree() - b.degree() + 1);
    const Rational& lead = b.c_.back();
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
      Rational f = a.coefficient(i + b.degree()) / lead;
      q[i] = f;
      if (f == 0) continue;
      for (int j = 0; j <= b.degree(); ++j)
        a.c_[i + j] -= f * b.c_[j];
    }
    a.trim();
    if (!a.is_zero()) throw std::logic_error("inexact q-polynomial division");
    return QPolynomial(std::move(q));
  }

  // Human-readable form such as "1 + 3q + q^2".
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      Rational v = c_[j];
      if (first) {
        if (v < 0) { out << "-"; v = -v; }
      } else {
        out << (v < 0 ? " - " : " + ");
        if (v < 0) v = -v;
      }
      const bool unit = (v == 1);
      if (j == 0 || !unit) {
        if (denominator(v) == 1) out << numerator(v).str();
        else out << "(" << to_fraction(v) << ")";
      }
      if (j >= 1) {
        out << "q";
        if (j > 1) out << "^" << j;
      }
      first = false;
    }
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;  // c_[j] multiplies q^j; no trailing zeros
};

// ---------------------------------------------------------------------------
// Σ p_n(q) x^n known through x^order.

class QPolySeries {
 public:
  explicit QPolySeries(int order) : order_(check_order(order)), c_(order + 1) {}

  static QPolySeries polynomial(std::vector<QPolynomial> coeffs, int order) {
    QPolySeries s(order);
    if (static_cast<int>(coeffs.size()) > order + 1)
      throw std::invalid_argument("QPolySeries: more coefficients than order allows");
    std::move(coeffs.begin(), coeffs.end(), s.c_.begin());
    return s;
  }

  int order() const { return order_; }

  const QPolynomial& coefficient(int n) const {
    if (n < 0 || n > order_) throw std::out_of_range("series coefficient beyond truncation order");
    return c_[n];
  }

  void set_coefficient(int n, QPolynomial v) {
    if (n < 0 || n > order_) throw std::out_of_range("series coefficient beyond truncation order");
    c_[n] = std::move(v);
  }

  int valuation() const {
    for (int i = 0; i <= order_; ++i)
      if (!c_[i].is_zero()) return i;
    return -1;
  }

  QPolySeries truncated(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("cannot raise truncation order");
    QPolySeries s(new_order);
    std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
    return s;
  }

  bool operator==(const QPolySeries& o) const = default;

  friend QPolySeries operator+(const QPolySeries& a, const QPolySeries& b) {
    check_same_order(a, b, "+");
    QPolySeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend QPolySeries operator-(const QPolySeries& a, const QPolySeries& b) {
    check_same_order(a, b, "-");
    QPolySeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }

  friend QPolySeries operator*(const QPolySeries& a, const QPolySeries& b) {
    check_same_order(a, b, "*");
    QPolySeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (int j = 0; i + j <= a.order_; ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  // Substitute q := 1 in every coefficient.
  TruncatedSeries at_q1() const {
    TruncatedSeries s(order_);
    for (int i = 0; i <= order_; ++i) s.set_coefficient(i, c_[i].evaluate(1));
    return s;
  }

  // d/dq followed by q := 1 — the standard way to turn a marked series into
  // the series of statistic totals.
  TruncatedSeries dq_at_q1() const {
    TruncatedSeries s(order_);
    for (int i = 0; i <= order_; ++i) s.set_coefficient(i, c_[i].derivative().evaluate(1));
    return s;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    return order;
  }
  static void check_same_order(const QPolySeries& a, const QPolySeries& b, const char* op) {
    if (a.order_ != b.order_)
      throw std::invalid_argument(std::string("series order mismatch in ") + op);
  }

  int order_;
  std::vector<QPolynomial> c_;
};

// Same contract as the univariate divide; every per-coefficient polynomial
// division must be exact (it is, for the catalog this library builds).
inline QPolySeries divide(const QPolySeries& a, const QPolySeries& b) {
  const int v = b.valuation();
  if (v < 0) throw std::domain_error("series division by zero");
  for (int i = 0; i < v && i <= a.order(); ++i)
    if (!a.coefficient(i).is_zero())
      throw std::domain_error("inexact series division: numerator valuation too small");
  const int n = std::min(a.order(), b.order()) - v;
  if (n < 0) throw std::invalid_argument("series division: no coefficients survive the shift");
  QPolySeries q(n);
  const QPolynomial& b0 = b.coefficient(v);
  for (int i = 0; i <= n; ++i) {
    QPolynomial acc = a.coefficient(i + v);
    for (int k = 0; k < i; ++k) acc = acc - q.coefficient(k) * b.coefficient(i - k + v);
    q.set_coefficient(i, exact_div(std::move(acc), b0));
  }
  return q;
}

inline QPolySeries sqrt(const QPolySeries& a) {
  if (!(a.coefficient(0) == QPolynomial(1)))
    throw std::domain_error("series sqrt requires constant term 1");
  QPolySeries s(a.order());
  s.set_coefficient(0, QPolynomial(1));
  const QPolynomial two(2);
  for (int i = 1; i <= a.order(); ++i) {
    QPolynomial acc = a.coefficient(i);
    for (int k = 1; k < i; ++k) acc = acc - s.coefficient(k) * s.coefficient(i - k);
    s.set_coefficient(i, exact_div(std::move(acc), two));
  }
  return s;
}

}  // namespace hassepaths
