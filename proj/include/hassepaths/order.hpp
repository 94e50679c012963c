#pragma once

// The partial order on each path class ("lies weakly below"), the cover
// relation obtained two independent ways — local rewrite rules per class,
// and transitive reduction of the full order matrix — plus the Δ/∇ counting
// statistics, their polynomials, and pointwise meet/join for the six
// lattice classes.  The rewrite route and the order route are kept wholly
// separate so their agreement is evidence, not tautology.

#include "hassepaths/closedforms.hpp"
#include "hassepaths/numbers.hpp"
#include "hassepaths/pathcore.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hassepaths {

// ---------------------------------------------------------------------------
// Caps for the brute-force routes (overridable by callers via force flags).

inline int default_enumeration_cap(PathClass c) {
  switch (c) {
    case PathClass::Dyck:
    case PathClass::Motzkin:
    case PathClass::Fibonacci:
    case PathClass::GrandFibonacci: return 10;
    case PathClass::GrandDyck:
    case PathClass::GrandMotzkin:
    case PathClass::Schroeder: return 9;
    case PathClass::GrandSchroeder: return 8;
  }
  throw std::logic_error("default_enumeration_cap: unknown class");
}

inline int default_order_cap(PathClass c) { return class_spec(c).grand() ? 5 : 7; }

inline void check_cap(const char* what, const ClassSpec& spec, long n, int cap, bool force) {
  if (force || n <= cap) return;
  throw CapExceeded(std::string(what) + " for " + spec.code + " capped at n = " +
                    std::to_string(cap) + " (requested " + std::to_string(n) +
                    "); pass force to override");
}

// ---------------------------------------------------------------------------
// The order itself.

inline bool below(const PathWord& a, const PathWord& b, const ClassSpec& spec) {
  if (a.width() != b.width())
    throw std::invalid_argument("below: words of different width in class " +
                                std::string(spec.code));
  const std::vector<int> ha = a.heights();
  const std::vector<int> hb = b.heights();
  for (size_t i = 0; i < ha.size(); ++i)
    if (ha[i] > hb[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Cover statistics.  Each class counts specific factors; the starred
// variants count only occurrences starting at nonzero height, and the
// Grand Fibonacci class counts occurrences anchored on the axis.

namespace detail {

inline long on_axis_occurrences(const PathWord& w, const PathWord& factor) {
  return occurrences(w, factor) - occurrences_off_axis(w, factor);
}

struct FactorWords {
  PathWord U, D, H, UD, DU, HU, UH, DH, HD, HH;
};

inline const FactorWords& factors_for(const ClassSpec& spec) {
  auto build = [](const ClassSpec& s) {
    FactorWords f;
    f.U = parse_path("U", s);
    f.D = parse_path("D", s);
    f.UD = parse_path("UD", s);
    f.DU = parse_path("DU", s);
    if (s.flat_step()) {
      f.H = parse_path("H", s);
      f.HU = parse_path("HU", s);
      f.UH = parse_path("UH", s);
      f.DH = parse_path("DH", s);
      f.HD = parse_path("HD", s);
      f.HH = parse_path("HH", s);
    }
    return f;
  };
  static const std::array<FactorWords, 8> table = {
      build(class_spec(PathClass::Dyck)),          build(class_spec(PathClass::GrandDyck)),
      build(class_spec(PathClass::Motzkin)),       build(class_spec(PathClass::GrandMotzkin)),
      build(class_spec(PathClass::Schroeder)),     build(class_spec(PathClass::GrandSchroeder)),
      build(class_spec(PathClass::Fibonacci)),     build(class_spec(PathClass::GrandFibonacci)),
  };
  return table[static_cast<size_t>(spec.id)];
}

}  // namespace detail

// |Δγ|: how many elements cover γ.
inline long delta_count(const PathWord& w, const ClassSpec& spec) {
  const auto& f = detail::factors_for(spec);
  switch (spec.id) {
    case PathClass::Dyck:
    case PathClass::GrandDyck:
      return occurrences(w, f.DU);
    case PathClass::Motzkin:
    case PathClass::GrandMotzkin:
      return occurrences(w, f.HU) + occurrences(w, f.DH) + occurrences(w, f.DU) +
             occurrences(w, f.HH);
    case PathClass::Schroeder:
    case PathClass::GrandSchroeder:
      return occurrences(w, f.H) + occurrences(w, f.DU);
    case PathClass::Fibonacci:
      return occurrences(w, f.HH);
    case PathClass::GrandFibonacci:
      return occurrences(w, f.HH) + detail::on_axis_occurrences(w, f.DU);
  }
  throw std::logic_error("delta_count: unknown class");
}

// |∇γ|: how many elements γ covers.
inline long nabla_count(const PathWord& w, const ClassSpec& spec) {
  const auto& f = detail::factors_for(spec);
  switch (spec.id) {
    case PathClass::Dyck:
      return occurrences_off_axis(w, f.UD);
    case PathClass::GrandDyck:
      return occurrences(w, f.UD);
    case PathClass::Motzkin:
      return occurrences(w, f.UH) + occurrences(w, f.HD) + occurrences(w, f.UD) +
             occurrences_off_axis(w, f.HH);
    case PathClass::GrandMotzkin:
      return occurrences(w, f.UH) + occurrences(w, f.HD) + occurrences(w, f.UD) +
             occurrences(w, f.HH);
    case PathClass::Schroeder:
      return occurrences_off_axis(w, f.H) + occurrences(w, f.UD);
    case PathClass::GrandSchroeder:
      return occurrences(w, f.H) + occurrences(w, f.UD);
    case PathClass::Fibonacci:
      return occurrences(w, f.UD);
    case PathClass::GrandFibonacci:
      return occurrences(w, f.HH) + detail::on_axis_occurrences(w, f.UD);
  }
  throw std::logic_error("nabla_count: unknown class");
}

// ---------------------------------------------------------------------------
// Cover relation via local rewrites.

namespace detail {

enum class Anchor { Anywhere, StartOffAxis, StartOnAxis };

struct RewriteRule {
  const char* from;
  const char* to;
  Anchor anchor;
};

inline const std::vector<RewriteRule>& up_rules(PathClass c) {
  using A = Anchor;
  static const std::array<std::vector<RewriteRule>, 8> table = {{
      /* DD */ {{"DU", "UD", A::Anywhere}},
      /* GD */ {{"DU", "UD", A::Anywhere}},
      /* MM */ {{"HU", "UH", A::Anywhere}, {"DH", "HD", A::Anywhere},
                {"DU", "HH", A::Anywhere}, {"HH", "UD", A::Anywhere}},
      /* GM */ {{"HU", "UH", A::Anywhere}, {"DH", "HD", A::Anywhere},
                {"DU", "HH", A::Anywhere}, {"HH", "UD", A::Anywhere}},
      /* SS */ {{"H", "UD", A::Anywhere}, {"DU", "H", A::Anywhere}},
      /* GS */ {{"H", "UD", A::Anywhere}, {"DU", "H", A::Anywhere}},
      /* FF */ {{"HH", "UD", A::Anywhere}},
      /* GF */ {{"HH", "UD", A::Anywhere}, {"DU", "HH", A::StartOnAxis}},
  }};
  return table[static_cast<size_t>(c)];
}

inline const std::vector<RewriteRule>& down_rules(PathClass c) {
  using A = Anchor;
  static const std::array<std::vector<RewriteRule>, 8> table = {{
      /* DD */ {{"UD", "DU", A::StartOffAxis}},
      /* GD */ {{"UD", "DU", A::Anywhere}},
      /* MM */ {{"UH", "HU", A::Anywhere}, {"HD", "DH", A::Anywhere},
                {"UD", "HH", A::Anywhere}, {"HH", "DU", A::StartOffAxis}},
      /* GM */ {{"UH", "HU", A::Anywhere}, {"HD", "DH", A::Anywhere},
                {"UD", "HH", A::Anywhere}, {"HH", "DU", A::Anywhere}},
      /* SS */ {{"H", "DU", A::StartOffAxis}, {"UD", "H", A::Anywhere}},
      /* GS */ {{"H", "DU", A::Anywhere}, {"UD", "H", A::Anywhere}},
      /* FF */ {{"UD", "HH", A::Anywhere}},
      /* GF */ {{"UD", "HH", A::StartOnAxis}, {"HH", "DU", A::Anywhere}},
  }};
  return table[static_cast<size_t>(c)];
}

inline std::vector<PathWord> apply_rules(const PathWord& w, const ClassSpec& spec,
                                         const std::vector<RewriteRule>& rules) {
  std::vector<PathWord> out;
  const auto& steps = w.steps();
  const std::vector<int> starts = w.step_start_heights();
  for (const RewriteRule& rule : rules) {
    const PathWord from = parse_path(rule.from, spec);
    const PathWord to = parse_path(rule.to, spec);
    const auto& fs = from.steps();
    if (fs.size() > steps.size()) continue;
    for (size_t p = 0; p + fs.size() <= steps.size(); ++p) {
      bool match = true;
      for (size_t i = 0; i < fs.size(); ++i)
        if (steps[p + i] != fs[i]) { match = false; break; }
      if (!match) continue;
      if (rule.anchor == Anchor::StartOffAxis && starts[p] == 0) continue;
      if (rule.anchor == Anchor::StartOnAxis && starts[p] != 0) continue;
      std::vector<StepKind> next(steps.begin(), steps.begin() + p);
      next.insert(next.end(), to.steps().begin(), to.steps().end());
      next.insert(next.end(), steps.begin() + p + fs.size(), steps.end());
      PathWord result(std::move(next));
      if (const auto v = validate(spec, result); !v.ok)
        throw std::logic_error("cover rewrite left the class: " + w.str() + " -> " +
                               result.str() + " (" + v.diagnostic + ")");
      out.push_back(std::move(result));
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("cover rewrites produced a duplicate from " + w.str());
  return out;
}

}  // namespace detail

// All elements covering γ, produced by the class's upward rewrites; sorted.
inline std::vector<PathWord> covers_by_rewrite(const PathWord& w, const ClassSpec& spec) {
  return detail::apply_rules(w, spec, detail::up_rules(spec.id));
}

// All elements γ covers, produced by the downward rewrites; sorted.
inline std::vector<PathWord> covered_by_rewrite(const PathWord& w, const ClassSpec& spec) {
  return detail::apply_rules(w, spec, detail::down_rules(spec.id));
}

// ---------------------------------------------------------------------------
// Edge sets over the enumerated class.

struct EdgeSet {
  std::vector<PathWord> elements;  // lexicographic order
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (lower, upper)
};

// Cover relation as the transitive reduction of the full <= matrix.
// Quadratic in |P_n| with a bitset inner loop; guarded by the order cap.
inline EdgeSet covers_by_order(const ClassSpec& spec, long n, bool force = false) {
  check_cap("order-route cover computation", spec, n, default_order_cap(spec.id), force);
  EdgeSet es;
  es.elements = enumerate_class(spec, n);
  const size_t N = es.elements.size();
  if (N == 0) return es;
  std::vector<std::vector<int>> prof;
  prof.reserve(N);
  for (const PathWord& w : es.elements) prof.push_back(w.heights());

  const size_t W = (N + 63) / 64;
  std::vector<std::uint64_t> above(N * W, 0), under(N * W, 0);
  for (size_t i = 0; i < N; ++i) {
    for (size_t j = i + 1; j < N; ++j) {
      bool le = true, ge = true;
      const auto& pi = prof[i];
      const auto& pj = prof[j];
      for (size_t t = 0; t < pi.size(); ++t) {
        if (pi[t] < pj[t]) ge = false;
        else if (pi[t] > pj[t]) le = false;
        if (!le && !ge) break;
      }
      if (le) {  // i < j in the order
        above[i * W + j / 64] |= std::uint64_t(1) << (j % 64);
        under[j * W + i / 64] |= std::uint64_t(1) << (i % 64);
      } else if (ge) {
        above[j * W + i / 64] |= std::uint64_t(1) << (i % 64);
        under[i * W + j / 64] |= std::uint64_t(1) << (j % 64);
      }
    }
  }
  // (i,j) is an edge iff i < j and nothing sits strictly between them.
  for (size_t i = 0; i < N; ++i) {
    const std::uint64_t* ai = &above[i * W];
    for (size_t word = 0; word < W; ++word) {
      std::uint64_t bits = ai[word];
      while (bits) {
        const size_t j = word * 64 + static_cast<size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* uj = &under[j * W];
        bool between = false;
        for (size_t t = 0; t < W; ++t)
          if (ai[t] & uj[t]) { between = true; break; }
        if (!between)
          es.edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      }
    }
  }
  return es;
}

// The same edge set assembled from the rewrite route (for cross-checking).
inline EdgeSet covers_from_rewrites(const ClassSpec& spec, long n, bool force = false) {
  check_cap("enumeration", spec, n, default_enumeration_cap(spec.id), force);
  EdgeSet es;
  es.elements = enumerate_class(spec, n);
  for (std::uint32_t i = 0; i < es.elements.size(); ++i) {
    for (const PathWord& up : covers_by_rewrite(es.elements[i], spec)) {
      const auto it = std::lower_bound(es.elements.begin(), es.elements.end(), up);
      if (it == es.elements.end() || !(*it == up))
        throw std::logic_error("rewrite produced a word outside the enumerated class: " +
                               up.str());
      es.edges.emplace_back(i, static_cast<std::uint32_t>(it - es.elements.begin()));
    }
  }
  std::sort(es.edges.begin(), es.edges.end());
  return es;
}

// ---------------------------------------------------------------------------
// Edge counting and Δ/∇ histograms by plain enumeration.

inline BigInt edge_count_enum(const ClassSpec& spec, long n, bool force = false) {
  check_cap("enumeration", spec, n, default_enumeration_cap(spec.id), force);
  BigInt total = 0;
  for (const PathWord& w : enumerate_class(spec, n)) total += delta_count(w, spec);
  return total;
}

inline BigInt edge_count_enum_nabla(const ClassSpec& spec, long n, bool force = false) {
  check_cap("enumeration", spec, n, default_enumeration_cap(spec.id), force);
  BigInt total = 0;
  for (const PathWord& w : enumerate_class(spec, n)) total += nabla_count(w, spec);
  return total;
}

// Histogram polynomial: coefficient of q^k counts elements with statistic k.
class DeltaPolynomial {
 public:
  DeltaPolynomial() = default;
  explicit DeltaPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  void bump(size_t k) {
    if (k >= c_.size()) c_.resize(k + 1);
    ++c_[k];
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }

  BigInt coefficient(int k) const {
    if (k < 0) throw std::out_of_range("negative exponent");
    return k < static_cast<int>(c_.size()) ? c_[k] : BigInt(0);
  }

  // Value at q = 1: the number of elements.
  BigInt total() const {
    BigInt s = 0;
    for (const BigInt& v : c_) s += v;
    return s;
  }

  // Derivative at q = 1: the edge count.
  BigInt weighted_total() const {
    BigInt s = 0;
    for (size_t k = 1; k < c_.size(); ++k) s += BigInt(k) * c_[k];
    return s;
  }

  bool operator==(const DeltaPolynomial&) const = default;

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      if (!first) out << " + ";
      if (k == 0 || c_[k] != 1) out << c_[k].str();
      if (k >= 1) {
        out << "q";
        if (k > 1) out << "^" << k;
      }
      first = false;
    }
    if (first) out << "0";
    return out.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

inline DeltaPolynomial delta_polynomial_enum(const ClassSpec& spec, long n, bool force = false) {
  check_cap("enumeration", spec, n, default_enumeration_cap(spec.id), force);
  DeltaPolynomial p;
  for (const PathWord& w : enumerate_class(spec, n))
    p.bump(static_cast<size_t>(delta_count(w, spec)));
  return p;
}

inline DeltaPolynomial nabla_polynomial_enum(const ClassSpec& spec, long n, bool force = false) {
  check_cap("enumeration", spec, n, default_enumeration_cap(spec.id), force);
  DeltaPolynomial p;
  for (const PathWord& w : enumerate_class(spec, n))
    p.bump(static_cast<size_t>(nabla_count(w, spec)));
  return p;
}

// ---------------------------------------------------------------------------
// Meet and join for the six lattice classes (pointwise min/max of profiles).

namespace detail {

inline PathWord encode_profile(const std::vector<int>& h, const ClassSpec& spec) {
  std::vector<StepKind> steps;
  size_t t = 0;
  while (t + 1 < h.size()) {
    const int d = h[t + 1] - h[t];
    if (d == 1) {
      steps.push_back(StepKind::Up);
      ++t;
    } else if (d == -1) {
      steps.push_back(StepKind::Down);
      ++t;
    } else if (d == 0) {
      size_t run = 0;
      while (t + 1 < h.size() && h[t + 1] == h[t]) { ++run; ++t; }
      const auto flat = spec.flat_step();
      if (!flat)
        throw ClosureViolation("profile needs flats but class " + std::string(spec.code) +
                               " has none");
      if (*flat == StepKind::FlatDouble) {
        if (run % 2 != 0)
          throw ClosureViolation("odd flat run of length " + std::to_string(run) +
                                 " cannot be written with double flats in " + spec.code);
        steps.insert(steps.end(), run / 2, StepKind::FlatDouble);
      } else {
        steps.insert(steps.end(), run, StepKind::FlatUnit);
      }
    } else {
      throw ClosureViolation("profile jump of " + std::to_string(d));
    }
  }
  PathWord w(std::move(steps));
  if (const auto v = validate(spec, w); !v.ok)
    throw ClosureViolation("re-encoded profile invalid in " + std::string(spec.code) + ": " +
                           v.diagnostic);
  return w;
}

inline PathWord bound(const PathWord& a, const PathWord& b, const ClassSpec& spec, bool lower) {
  if (spec.id == PathClass::Fibonacci || spec.id == PathClass::GrandFibonacci)
    throw std::invalid_argument("meet/join undefined for the strip classes");
  if (a.width() != b.width())
    throw std::invalid_argument("meet/join: words of different width");
  if (!validate(spec, a).ok || !validate(spec, b).ok)
    throw std::invalid_argument("meet/join: invalid operand");
  const std::vector<int> ha = a.heights();
  const std::vector<int> hb = b.heights();
  std::vector<int> h(ha.size());
  for (size_t i = 0; i < h.size(); ++i) h[i] = lower ? std::min(ha[i], hb[i]) : std::max(ha[i], hb[i]);
  return encode_profile(h, spec);
}

}  // namespace detail

inline PathWord meet(const PathWord& a, const PathWord& b, const ClassSpec& spec) {
  return detail::bound(a, b, spec, true);
}

inline PathWord join(const PathWord& a, const PathWord& b, const ClassSpec& spec) {
  return detail::bound(a, b, spec, false);
}

// ---------------------------------------------------------------------------
// Summary and exports.

struct HasseSummary {
  PathClass cls;
  long long n;
  BigInt vertices;
  BigInt edges;
  Rational index;
};

inline HasseSummary hasse_summary(PathClass c, long long n) {
  HasseSummary s;
  s.cls = c;
  s.n = n;
  s.vertices = vertex_count(c, n);
  s.edges = edge_count_formula(c, n);
  s.index = Rational(s.edges, s.vertices);
  return s;
}

inline std::string edge_set_csv(const EdgeSet& es) {
  std::ostringstream out;
  out << "lower,upper\n";
  for (const auto& [i, j] : es.edges)
    out << es.elements[i].str() << "," << es.elements[j].str() << "\n";
  return out.str();
}

inline std::string edge_set_json(const ClassSpec& spec, long n, const EdgeSet& es) {
  std::ostringstream out;
  out << "{\"class\":\"" << spec.code << "\",\"n\":" << n << ",\"elements\":[";
  for (size_t i = 0; i < es.elements.size(); ++i)
    out << (i ? "," : "") << "\"" << es.elements[i].str() << "\"";
  out << "],\"edges\":[";
  for (size_t e = 0; e < es.edges.size(); ++e)
    out << (e ? "," : "") << "[" << es.edges[e].first << "," << es.edges[e].second << "]";
  out << "]}";
  return out.str();
}

}  // namespace hassepaths
