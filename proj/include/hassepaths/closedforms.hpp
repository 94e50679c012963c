#pragma once

// Closed-form counting: the classical sequences (Catalan, central binomial,
// trinomial, Motzkin, Delannoy, Schröder, Fibonacci/Lucas), the per-class
// vertex and edge-count formulas, exact Hasse indices, and the asymptotic
// estimators.  Every class with several published edge identities computes
// all of them and insists they agree before answering; formulas stated with
// fractional factors are evaluated in exact rational arithmetic and checked
// to be integers.  Asymptotic comparison happens in log space so that sizes
// like n = 300 (far beyond double range) stay finite.

#include "hassepaths/numbers.hpp"
#include "hassepaths/pathcore.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace hassepaths {

// ---------------------------------------------------------------------------
// Sequences.

inline BigInt catalan(long long n) {
  if (n < 0) throw std::domain_error("catalan: negative index");
  return exact_div(binomial(2 * n, n), BigInt(n + 1));
}

inline BigInt central_binomial(long long n) {
  if (n < 0) throw std::domain_error("central_binomial: negative index");
  return binomial(2 * n, n);
}

// Row n of the trinomial triangle: coefficients of (1+x+x^2)^n, size 2n+1.
inline std::vector<BigInt> trinomial_row(long long n) {
  if (n < 0) throw std::domain_error("trinomial_row: negative index");
  std::vector<BigInt> row = {1};
  for (long long i = 1; i <= n; ++i) {
    std::vector<BigInt> next(row.size() + 2);
    for (size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
      next[j + 2] += row[j];
    }
    row = std::move(next);
  }
  return row;
}

// Coefficient of x^k in (1+x+x^2)^n; zero outside 0..2n.
inline BigInt trinomial(long long n, long long k) {
  if (n < 0) throw std::domain_error("trinomial: negative index");
  if (k < 0 || k > 2 * n) return 0;
  return trinomial_row(n)[k];
}

inline BigInt central_trinomial(long long n) { return trinomial(n, n); }

inline BigInt motzkin_number(long long n) {
  if (n < 0) throw std::domain_error("motzkin_number: negative index");
  BigInt prev = 1, cur = 1;  // M_0, M_1
  if (n == 0) return prev;
  for (long long i = 2; i <= n; ++i) {
    BigInt next = exact_div((2 * i + 1) * cur + 3 * (i - 1) * prev, BigInt(i + 2));
    prev = cur;
    cur = next;
  }
  return cur;
}

inline BigInt central_delannoy(long long n) {
  if (n < 0) throw std::domain_error("central_delannoy: negative index");
  BigInt prev = 1, cur = 3;  // d_0, d_1
  if (n == 0) return prev;
  for (long long i = 2; i <= n; ++i) {
    BigInt next = exact_div(3 * (2 * i - 1) * cur - (i - 1) * prev, BigInt(i));
    prev = cur;
    cur = next;
  }
  return cur;
}

inline BigInt large_schroder(long long n) {
  if (n < 0) throw std::domain_error("large_schroder: negative index");
  BigInt prev = 1, cur = 2;  // r_0, r_1
  if (n == 0) return prev;
  for (long long i = 2; i <= n; ++i) {
    BigInt next = exact_div(3 * (2 * i - 1) * cur - (i - 2) * prev, BigInt(i + 1));
    prev = cur;
    cur = next;
  }
  return cur;
}

inline BigInt fibonacci_number(long long n) {
  if (n < 0) throw std::domain_error("fibonacci_number: negative index");
  BigInt a = 0, b = 1;  // F_0, F_1
  for (long long i = 0; i < n; ++i) {
    BigInt t = a + b;
    a = b;
    b = t;
  }
  return a;
}

inline BigInt lucas_number(long long n) {
  if (n < 0) throw std::domain_error("lucas_number: negative index");
  BigInt a = 2, b = 1;  // L_0, L_1
  for (long long i = 0; i < n; ++i) {
    BigInt t = a + b;
    a = b;
    b = t;
  }
  return a;
}

inline BigInt power_of(long long base, long long e) {
  if (e < 0) throw std::domain_error("power_of: negative exponent");
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e));
}

// ---------------------------------------------------------------------------
// Vertex counts.

inline BigInt vertex_count(PathClass c, long long n) {
  if (n < 0) throw std::domain_error("vertex_count: negative size");
  switch (c) {
    case PathClass::Dyck: return catalan(n);
    case PathClass::GrandDyck: return central_binomial(n);
    case PathClass::Motzkin: return motzkin_number(n);
    case PathClass::GrandMotzkin: return central_trinomial(n);
    case PathClass::Schroeder: return large_schroder(n);
    case PathClass::GrandSchroeder: return central_delannoy(n);
    case PathClass::Fibonacci: return fibonacci_number(n + 1);
    case PathClass::GrandFibonacci:
      // (2^{n+1} + (-1)^n) / 3
      return exact_div(power_of(2, n + 1) + (n % 2 == 0 ? 1 : -1), BigInt(3));
  }
  throw std::logic_error("vertex_count: unknown class");
}

// ---------------------------------------------------------------------------
// Edge-count identities, one function per published form.  All are total in
// n >= 0, returning the class's true edge count (small-n cases where a sum
// formula loses meaning are handled explicitly).

inline BigInt dyck_edges_binomial(long long n) {
  return binomial(2 * n - 1, n - 2);  // vanishes for n < 2
}

inline BigInt dyck_edges_central_ratio(long long n) {
  if (n == 0) return 0;
  Rational r = Rational(central_binomial(n)) * Rational(n - 1, 2 * (n + 1));
  return rational_to_integer(r);
}

inline BigInt grand_dyck_edges(long long n) {
  return exact_div(central_binomial(n) * n, BigInt(2));
}

inline BigInt motzkin_edges_trinomial_gap(long long n) {
  if (n < 1) return 0;
  return central_trinomial(n) - motzkin_number(n) + central_trinomial(n - 1) -
         motzkin_number(n - 1);
}

inline BigInt motzkin_edges_trinomial_pair(long long n) {
  if (n < 1) return 0;
  return trinomial(n, n - 2) + trinomial(n - 1, n - 3);
}

inline BigInt motzkin_edges_binomial_sum(long long n) {
  if (n < 1) return 0;
  Rational acc = 0;
  for (long long k = 0; 2 * k <= n; ++k)
    acc += Rational(binomial(n, k) * binomial(n - k, k) * k * (n - k), k + 1);
  return rational_to_integer(Rational(2, n) * acc);
}

inline BigInt grand_motzkin_edges_trinomial_sum(long long n) {
  if (n < 2) return 0;
  const long long m = n - 2;
  BigInt acc = 0;
  for (long long k = 0; k <= m; ++k)
    acc += central_trinomial(k) * power_of(3, m - k);
  return 2 * acc;
}

inline BigInt grand_motzkin_edges_alternating(long long n) {
  if (n < 2) return 0;
  const long long m = n - 2;
  BigInt acc = 0;
  for (long long k = 0; k <= m; ++k) {
    BigInt term = binomial(2 * k, k) * binomial(2 * m - 2 * k, m - k) * (2 * k + 1) *
                  power_of(3, k);
    acc += ((m - k) % 2 == 0) ? term : -term;
  }
  return rational_to_integer(Rational(2 * acc, power_of(4, m)));
}

inline BigInt grand_motzkin_edges_binomial_transform(long long n) {
  if (n < 2) return 0;
  const long long m = n - 2;
  BigInt acc = 0;
  for (long long k = 0; k <= m; ++k) {
    BigInt term = binomial(m + 1, k + 1) * binomial(2 * k, k) * power_of(3, m - k);
    acc += (k % 2 == 0) ? term : -term;
  }
  return 2 * acc;
}

inline BigInt schroder_edges_delannoy_gap(long long n) {
  if (n < 1) return 0;
  return central_delannoy(n) - large_schroder(n) - central_delannoy(n - 1) +
         large_schroder(n - 1);
}

// Multiset coefficient ((s multichoose m)) = C(s+m-1, m).
inline BigInt multichoose(long long s, long long m) {
  if (m == 0) return 1;
  return binomial(s + m - 1, m);
}

inline BigInt schroder_edges_multiset_sum(long long n) {
  Rational acc = 0;
  for (long long k = 1; k <= n; ++k)
    acc += Rational(multichoose(2 * k, n - k) * binomial(2 * k, k) * k, k + 1);
  return rational_to_integer(acc);
}

inline BigInt grand_schroder_edges_binomial_sum(long long n) {
  BigInt acc = 0;
  for (long long k = 0; k <= n; ++k)
    acc += binomial(n + k, 2 * k) * binomial(2 * k, k) * (n - k);
  return 2 * acc;
}

inline BigInt grand_schroder_edges_weighted_sum(long long n) {
  Rational acc = 0;
  for (long long k = 0; 2 * k <= n; ++k) {
    Rational pow3 = n - 2 * k - 2 >= 0 ? Rational(power_of(3, n - 2 * k - 2))
                                       : Rational(1, power_of(3, 2 * k + 2 - n));
    acc += Rational(binomial(n, k) * binomial(n - k, k) * (n - 2 * k) * (n + k + 2),
                    k + 1) *
           Rational(power_of(2, k + 1)) * pow3;
  }
  return rational_to_integer(acc);
}

inline BigInt fibonacci_poset_edges(long long n) {
  return exact_div(n * lucas_number(n) - fibonacci_number(n), BigInt(5));
}

inline BigInt grand_fibonacci_poset_edges(long long n) {
  const BigInt sign = (n % 2 == 0) ? 1 : -1;
  return exact_div((3 * n - 1) * power_of(2, n + 1) + sign * 2 * (3 * n + 1), BigInt(27));
}

// The formula route: evaluates every identity known for the class, requires
// unanimity, and returns the common value.
inline BigInt edge_count_formula(PathClass c, long long n) {
  if (n < 0) throw std::domain_error("edge_count_formula: negative size");
  auto agree = [&](std::initializer_list<BigInt> values) -> BigInt {
    const BigInt* first = values.begin();
    for (const BigInt& v : values)
      if (v != *first)
        throw std::logic_error("edge-count identities disagree for class " +
                               std::string(class_spec(c).code) + " at n = " +
                               std::to_string(n));
    return *first;
  };
  switch (c) {
    case PathClass::Dyck:
      return agree({dyck_edges_binomial(n), dyck_edges_central_ratio(n)});
    case PathClass::GrandDyck:
      return grand_dyck_edges(n);
    case PathClass::Motzkin:
      return agree({motzkin_edges_trinomial_gap(n), motzkin_edges_trinomial_pair(n),
                    motzkin_edges_binomial_sum(n)});
    case PathClass::GrandMotzkin:
      return agree({grand_motzkin_edges_trinomial_sum(n), grand_motzkin_edges_alternating(n),
                    grand_motzkin_edges_binomial_transform(n)});
    case PathClass::Schroeder:
      return agree({schroder_edges_delannoy_gap(n), schroder_edges_multiset_sum(n)});
    case PathClass::GrandSchroeder:
      return agree({grand_schroder_edges_binomial_sum(n), grand_schroder_edges_weighted_sum(n)});
    case PathClass::Fibonacci:
      return fibonacci_poset_edges(n);
    case PathClass::GrandFibonacci:
      return grand_fibonacci_poset_edges(n);
  }
  throw std::logic_error("edge_count_formula: unknown class");
}

inline Rational hasse_index_exact(PathClass c, long long n) {
  return Rational(edge_count_formula(c, n), vertex_count(c, n));
}

// Floating approximation of the exact index, computed through logs so huge
// numerators/denominators cannot overflow on the way to a small quotient.
inline double hasse_index_approx(PathClass c, long long n) {
  const Rational r = hasse_index_exact(c, n);
  if (numerator(r) == 0) return 0.0;
  return std::exp(log_big(numerator(r)) - log_big(denominator(r)));
}

// ---------------------------------------------------------------------------
// Asymptotics.  Quantities with a published leading-order estimate.

enum class AsymptoticQuantity {
  CentralTrinomial,
  MotzkinNumber,
  CentralDelannoy,
  LargeSchroderNumber,
  MotzkinEdges,
  GrandMotzkinEdges,
  SchroderEdges,
  GrandSchroderEdges,
  FibonacciEdges,
  GrandFibonacciEdges,
};

inline const std::vector<AsymptoticQuantity>& all_asymptotic_quantities() {
  static const std::vector<AsymptoticQuantity> v = {
      AsymptoticQuantity::CentralTrinomial,   AsymptoticQuantity::MotzkinNumber,
      AsymptoticQuantity::CentralDelannoy,    AsymptoticQuantity::LargeSchroderNumber,
      AsymptoticQuantity::MotzkinEdges,       AsymptoticQuantity::GrandMotzkinEdges,
      AsymptoticQuantity::SchroderEdges,      AsymptoticQuantity::GrandSchroderEdges,
      AsymptoticQuantity::FibonacciEdges,     AsymptoticQuantity::GrandFibonacciEdges,
  };
  return v;
}

inline const char* asymptotic_quantity_name(AsymptoticQuantity q) {
  switch (q) {
    case AsymptoticQuantity::CentralTrinomial: return "central trinomial";
    case AsymptoticQuantity::MotzkinNumber: return "Motzkin number";
    case AsymptoticQuantity::CentralDelannoy: return "central Delannoy";
    case AsymptoticQuantity::LargeSchroderNumber: return "large Schroeder number";
    case AsymptoticQuantity::MotzkinEdges: return "Motzkin edges";
    case AsymptoticQuantity::GrandMotzkinEdges: return "grand Motzkin edges";
    case AsymptoticQuantity::SchroderEdges: return "Schroeder edges";
    case AsymptoticQuantity::GrandSchroderEdges: return "grand Schroeder edges";
    case AsymptoticQuantity::FibonacciEdges: return "Fibonacci edges";
    case AsymptoticQuantity::GrandFibonacciEdges: return "grand Fibonacci edges";
  }
  return "?";
}

inline BigInt asymptotic_exact(AsymptoticQuantity q, long long n) {
  switch (q) {
    case AsymptoticQuantity::CentralTrinomial: return central_trinomial(n);
    case AsymptoticQuantity::MotzkinNumber: return motzkin_number(n);
    case AsymptoticQuantity::CentralDelannoy: return central_delannoy(n);
    case AsymptoticQuantity::LargeSchroderNumber: return large_schroder(n);
    case AsymptoticQuantity::MotzkinEdges: return edge_count_formula(PathClass::Motzkin, n);
    case AsymptoticQuantity::GrandMotzkinEdges:
      return edge_count_formula(PathClass::GrandMotzkin, n);
    case AsymptoticQuantity::SchroderEdges: return edge_count_formula(PathClass::Schroeder, n);
    case AsymptoticQuantity::GrandSchroderEdges:
      return edge_count_formula(PathClass::GrandSchroeder, n);
    case AsymptoticQuantity::FibonacciEdges: return edge_count_formula(PathClass::Fibonacci, n);
    case AsymptoticQuantity::GrandFibonacciEdges:
      return edge_count_formula(PathClass::GrandFibonacci, n);
  }
  throw std::logic_error("asymptotic_exact: unknown quantity");
}

// Natural log of the leading-order estimate; exact in log space, so valid
// far beyond double range.
inline double asymptotic_log_estimate(AsymptoticQuantity q, long long n) {
  if (n < 1) throw std::domain_error("asymptotic_log_estimate: n must be >= 1");
  const double N = static_cast<double>(n);
  const double pi = std::numbers::pi;
  const double l2 = std::log(2.0);
  const double l3 = std::log(3.0);
  const double silver = std::log(1.0 + std::sqrt(2.0));  // log(1+sqrt 2)
  const double phi = std::log((1.0 + std::sqrt(5.0)) / 2.0);
  switch (q) {
    case AsymptoticQuantity::CentralTrinomial:
      // (3^n / 2) sqrt(3 / (n pi))
      return N * l3 - l2 + 0.5 * (l3 - std::log(N) - std::log(pi));
    case AsymptoticQuantity::MotzkinNumber:
      // (3^{n+1} / (2n)) sqrt(3 / (n pi))
      return (N + 1) * l3 - std::log(2.0 * N) + 0.5 * (l3 - std::log(N) - std::log(pi));
    case AsymptoticQuantity::CentralDelannoy:
      // (1+sqrt2)^{2n+1} / (2 sqrt(sqrt2 n pi))
      return (2 * N + 1) * silver - l2 - 0.5 * (0.5 * l2 + std::log(N) + std::log(pi));
    case AsymptoticQuantity::LargeSchroderNumber:
      // (1+sqrt2)^{2n+1} / (n sqrt(2 sqrt2 n pi))
      return (2 * N + 1) * silver - std::log(N) - 0.5 * (1.5 * l2 + std::log(N) + std::log(pi));
    case AsymptoticQuantity::MotzkinEdges:
      // 2 * 3^n / sqrt(3 n pi)
      return l2 + N * l3 - 0.5 * (l3 + std::log(N) + std::log(pi));
    case AsymptoticQuantity::GrandMotzkinEdges:
      // 2 * 3^{n-2} sqrt(3 n / pi)
      return l2 + (N - 2) * l3 + 0.5 * (l3 + std::log(N) - std::log(pi));
    case AsymptoticQuantity::SchroderEdges:
      // (1+sqrt2)^{2n} / sqrt(sqrt2 n pi)
      return 2 * N * silver - 0.5 * (0.5 * l2 + std::log(N) + std::log(pi));
    case AsymptoticQuantity::GrandSchroderEdges:
      // sqrt(n / (2 sqrt2 pi)) (1+sqrt2)^{2n}
      return 0.5 * (std::log(N) - 1.5 * l2 - std::log(pi)) + 2 * N * silver;
    case AsymptoticQuantity::FibonacciEdges:
      // (n/5) phi^n
      return std::log(N / 5.0) + N * phi;
    case AsymptoticQuantity::GrandFibonacciEdges:
      // (n/9) 2^{n+1}
      return std::log(N / 9.0) + (N + 1) * l2;
  }
  throw std::logic_error("asymptotic_log_estimate: unknown quantity");
}

struct AsymptoticReport {
  AsymptoticQuantity quantity;
  long long n;
  BigInt exact;
  double log_exact;
  double log_estimate;
  double estimate;  // exp(log_estimate); may overflow to inf for large n
  double ratio;     // exact / estimate, computed from the logs
};

inline AsymptoticReport asymptotic_report(AsymptoticQuantity q, long long n) {
  AsymptoticReport r;
  r.quantity = q;
  r.n = n;
  r.exact = asymptotic_exact(q, n);
  r.log_exact = log_big(r.exact);
  r.log_estimate = asymptotic_log_estimate(q, n);
  r.estimate = std::exp(r.log_estimate);
  r.ratio = std::exp(r.log_exact - r.log_estimate);
  return r;
}

// ---------------------------------------------------------------------------
// Classification of the Hasse index growth.

enum class IndexCategory {
  Boolean,
  AsymptoticallyBoolean,
  AsymptoticallyQuasiBoolean,
  NotQuasiBoolean,
};

inline const char* index_category_name(IndexCategory c) {
  switch (c) {
    case IndexCategory::Boolean: return "Boolean";
    case IndexCategory::AsymptoticallyBoolean: return "asymptotically Boolean";
    case IndexCategory::AsymptoticallyQuasiBoolean: return "asymptotically quasi Boolean";
    case IndexCategory::NotQuasiBoolean: return "not asymptotically quasi Boolean";
  }
  return "?";
}

struct ClassificationReport {
  PathClass cls;
  std::string index_form;  // exact or asymptotic expression of i(P_n)
  double limit_slope;      // lim i(P_n)/n
  double deviation;        // c = |1/2 - slope|
  IndexCategory category;  // against the threshold c <= 1/10
  bool tamed;              // index asymptotically equivalent to the Grand one
};

inline ClassificationReport classification_report(PathClass c) {
  const double quasi_threshold = 0.1;
  auto make = [&](std::string form, double slope, IndexCategory forced, bool tamed) {
    ClassificationReport r;
    r.cls = c;
    r.index_form = std::move(form);
    r.limit_slope = slope;
    r.deviation = std::abs(0.5 - slope);
    if (forced == IndexCategory::Boolean || forced == IndexCategory::AsymptoticallyBoolean)
      r.category = forced;
    else
      r.category = r.deviation <= quasi_threshold ? IndexCategory::AsymptoticallyQuasiBoolean
                                                  : IndexCategory::NotQuasiBoolean;
    r.tamed = tamed;
    return r;
  };
  const IndexCategory open = IndexCategory::NotQuasiBoolean;  // resolved by threshold
  switch (c) {
    case PathClass::Dyck:
      return make("(n-1)/2", 0.5, IndexCategory::AsymptoticallyBoolean, true);
    case PathClass::GrandDyck:
      return make("n/2", 0.5, IndexCategory::Boolean, true);
    case PathClass::Motzkin:
      return make("~ (4/9) n", 4.0 / 9.0, open, true);
    case PathClass::GrandMotzkin:
      return make("~ (4/9) n", 4.0 / 9.0, open, true);
    case PathClass::Schroeder:
      return make("~ (2-sqrt(2)) n", 2.0 - std::sqrt(2.0), open, true);
    case PathClass::GrandSchroeder:
      return make("~ (2-sqrt(2)) n", 2.0 - std::sqrt(2.0), open, true);
    case PathClass::Fibonacci:
      return make("~ n/(sqrt(5) phi)", 1.0 / (std::sqrt(5.0) * (1.0 + std::sqrt(5.0)) / 2.0),
                  open, false);
    case PathClass::GrandFibonacci:
      return make("~ n/3", 1.0 / 3.0, open, false);
  }
  throw std::logic_error("classification_report: unknown class");
}

}  // namespace hassepaths
