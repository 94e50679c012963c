#pragma once

// The generating-series route: base series for the vertex counts, the
// q-marked series whose x^n coefficient is the Δ-histogram polynomial of
// the poset at size n, and closed forms for the edge-count series.  All
// three are built from radicals and exact division over Q, so every
// coefficient comes out exact; internal truncation orders carry a little
// headroom because division by a series of positive valuation shortens
// the result.

#include "hassepaths/pathcore.hpp"
#include "hassepaths/series.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hassepaths {

// ---------------------------------------------------------------------------
// Base series.  One-letter names follow the usual conventions:
//   B central binomial, C Catalan, T central trinomial, M Motzkin,
//   d central Delannoy, r large Schröder.

inline bool is_base_series_name(char name) {
  return name == 'B' || name == 'C' || name == 'T' || name == 'M' || name == 'd' || name == 'r';
}

inline TruncatedSeries base_series(char name, int order) {
  const int N = order + 2;
  auto poly = [N](std::vector<Rational> c) {
    return TruncatedSeries::polynomial(std::move(c), N);
  };
  switch (name) {
    case 'B':  // 1/sqrt(1-4x)
      return divide(poly({1}), sqrt(poly({1, -4}))).truncated(order);
    case 'C':  // (1 - sqrt(1-4x))/(2x)
      return divide(poly({1}) - sqrt(poly({1, -4})), poly({0, 2})).truncated(order);
    case 'T':  // 1/sqrt(1-2x-3x^2)
      return divide(poly({1}), sqrt(poly({1, -2, -3}))).truncated(order);
    case 'M':  // (1 - x - sqrt(1-2x-3x^2))/(2x^2)
      return divide(poly({1, -1}) - sqrt(poly({1, -2, -3})), poly({0, 0, 2})).truncated(order);
    case 'd':  // 1/sqrt(1-6x+x^2)
      return divide(poly({1}), sqrt(poly({1, -6, 1}))).truncated(order);
    case 'r':  // (1 - x - sqrt(1-6x+x^2))/(2x)
      return divide(poly({1, -1}) - sqrt(poly({1, -6, 1})), poly({0, 2})).truncated(order);
  }
  throw std::invalid_argument(std::string("unknown base series '") + name +
                              "' (one of B, C, T, M, d, r)");
}

// ---------------------------------------------------------------------------
// The q-marked catalog: [x^n] class_delta_series(c) is the polynomial
// whose q^k coefficient counts size-n elements covered by exactly k others.
// Setting q = 1 recovers the vertex series; d/dq at q = 1 the edge series.

inline QPolySeries class_delta_series(PathClass c, int order) {
  const int N = order + 2;
  const QPolynomial one(1);
  const QPolynomial q = QPolynomial::q();
  const QPolynomial zero;
  auto S = [N](std::vector<QPolynomial> v) {
    return QPolySeries::polynomial(std::move(v), N);
  };
  switch (c) {
    case PathClass::Dyck: {
      const QPolySeries rad =
          S({one, QPolynomial(-2) * (one + q), (one - q) * (one - q)});
      return divide(S({one, -(one - q)}) - sqrt(rad), S({zero, QPolynomial(2) * q}))
          .truncated(order);
    }
    case PathClass::GrandDyck: {
      const QPolySeries rad =
          S({one, QPolynomial(-2) * (one + q), (one - q) * (one - q)});
      return divide(S({one}), sqrt(rad)).truncated(order);
    }
    case PathClass::Motzkin: {
      const QPolySeries rad =
          S({one, one}) * S({one, -(one + QPolynomial(2) * q), q * q - one,
                             (one - q) * (one - q)});
      return divide(S({one, -q, -(one - q)}) - sqrt(rad),
                    S({zero, zero, QPolynomial(2) * q}))
          .truncated(order);
    }
    case PathClass::GrandMotzkin: {
      const QPolySeries rad =
          S({one, one}) * S({one, -(one + QPolynomial(2) * q), q * q - one,
                             (one - q) * (one - q)});
      return divide(S({one, one - q}), sqrt(rad)).truncated(order);
    }
    case PathClass::Schroeder: {
      const QPolynomial w = one - QPolynomial(2) * q;
      const QPolySeries rad = S({one, QPolynomial(-2) * (one + QPolynomial(2) * q), w * w});
      return divide(S({one, -one}) - sqrt(rad),
                    S({zero, QPolynomial(2) * q, QPolynomial(2) * q * (one - q)}))
          .truncated(order);
    }
    case PathClass::GrandSchroeder: {
      const QPolynomial w = one - QPolynomial(2) * q;
      const QPolySeries rad = S({one, QPolynomial(-2) * (one + QPolynomial(2) * q), w * w});
      return divide(S({one}), sqrt(rad)).truncated(order);
    }
    case PathClass::Fibonacci:
      return divide(S({one, one - q}), S({one, -q, -one, -(one - q)})).truncated(order);
    case PathClass::GrandFibonacci:
      return divide(S({one, one - q}), S({one, -q, -(one + q), q * q - one}))
          .truncated(order);
  }
  throw std::logic_error("class_delta_series: unknown class");
}

inline TruncatedSeries vertex_series(PathClass c, int order) {
  return class_delta_series(c, order).at_q1();
}

inline TruncatedSeries edge_series_via_delta(PathClass c, int order) {
  return class_delta_series(c, order).dq_at_q1();
}

// ---------------------------------------------------------------------------
// Edge-count series in closed form, one radical expression per class.

inline TruncatedSeries edge_series_closed(PathClass c, int order) {
  const int N = order + 4;
  auto poly = [N](std::vector<Rational> v) {
    return TruncatedSeries::polynomial(std::move(v), N);
  };
  switch (c) {
    case PathClass::Dyck: {
      const TruncatedSeries s = sqrt(poly({1, -4}));
      return divide(poly({1, -3}) - poly({1, -1}) * s, poly({0, 2}) * s).truncated(order);
    }
    case PathClass::GrandDyck: {
      const TruncatedSeries s = sqrt(poly({1, -4}));
      return divide(poly({0, 1}), poly({1, -4}) * s).truncated(order);
    }
    case PathClass::Motzkin: {
      const TruncatedSeries s = sqrt(poly({1, -2, -3}));
      return divide(poly({1, 1}) * (poly({1, -2, -1}) - poly({1, -1}) * s),
                    poly({0, 0, 2}) * s)
          .truncated(order);
    }
    case PathClass::GrandMotzkin: {
      const TruncatedSeries s = sqrt(poly({1, -2, -3}));
      return divide(poly({0, 0, 2}), poly({1, -3}) * s).truncated(order);
    }
    case PathClass::Schroeder: {
      const TruncatedSeries s = sqrt(poly({1, -6, 1}));
      return divide(poly({1, -1}) * (poly({1, -4, 1}) - poly({1, -1}) * s),
                    poly({0, 2}) * s)
          .truncated(order);
    }
    case PathClass::GrandSchroeder: {
      const TruncatedSeries s = sqrt(poly({1, -6, 1}));
      return divide(poly({0, 2, -2}), poly({1, -6, 1}) * s).truncated(order);
    }
    case PathClass::Fibonacci:
      return divide(poly({0, 0, 1}), poly({1, -1, -1}) * poly({1, -1, -1})).truncated(order);
    case PathClass::GrandFibonacci:
      return divide(poly({0, 0, 2}), poly({1, -1, -2}) * poly({1, -1, -2})).truncated(order);
  }
  throw std::logic_error("edge_series_closed: unknown class");
}

}  // namespace hassepaths
