#pragma once

// Lattices of integer partitions under containment: ideal counting, corner
// cells, the four sub- and quotient shapes attached to a cell, and the
// edge count of the ideal lattice of a shape — computed either by the
// corner-cell product formula or by brute-force enumeration of the ideals.

#include "hassepaths/numbers.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hassepaths {

class Partition {
 public:
  Partition() = default;  // the empty shape

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be non-increasing");
    }
  }

  // Comma-separated parts; "" and "0" both name the empty shape.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
      const auto first = token.find_first_not_of(" \t");
      if (first == std::string::npos)
        throw std::invalid_argument("empty part in partition '" + std::string(text) + "'");
      const auto last = token.find_last_not_of(" \t");
      token = token.substr(first, last - first + 1);
      size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad partition part '" + token + "'");
      }
      if (used != token.size())
        throw std::invalid_argument("bad partition part '" + token + "'");
      parts.push_back(value);
    }
    if (parts.empty() || (parts.size() == 1 && parts[0] == 0)) return Partition();
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  long long cells() const {
    long long s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  int part(int i) const {  // 1-indexed, 0 beyond the last row
    return i >= 1 && i <= rows() ? parts_[i - 1] : 0;
  }

  bool contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 1; i <= mu.rows(); ++i)
      if (mu.part(i) > part(i)) return false;
    return true;
  }

  std::string str() const {
    if (parts_.empty()) return "0";
    std::ostringstream out;
    for (size_t i = 0; i < parts_.size(); ++i) out << (i ? "," : "") << parts_[i];
    return out.str();
  }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

inline Partition rectangle(int m, int n) {  // m rows of length n
  if (m < 0 || n < 0) throw std::invalid_argument("rectangle dimensions must be nonnegative");
  if (m == 0 || n == 0) return Partition();
  return Partition(std::vector<int>(static_cast<size_t>(m), n));
}

inline Partition staircase(int k) {  // parts k, k-1, ..., 1
  if (k < 0) throw std::invalid_argument("staircase height must be nonnegative");
  std::vector<int> parts;
  for (int p = k; p >= 1; --p) parts.push_back(p);
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Ideal counting: the number of partitions contained in the shape, by a
// row-by-row sweep with running prefix sums.

inline BigInt ideal_size(const Partition& lambda) {
  const int m = lambda.rows();
  if (m == 0) return 1;
  // h[v] = number of admissible tails for rows k..m whose row k equals v.
  std::vector<BigInt> h(static_cast<size_t>(lambda.part(m)) + 1, 1);
  for (int k = m - 1; k >= 1; --k) {
    std::vector<BigInt> prefix(h.size());
    std::partial_sum(h.begin(), h.end(), prefix.begin());
    std::vector<BigInt> next(static_cast<size_t>(lambda.part(k)) + 1);
    for (size_t v = 0; v < next.size(); ++v)
      next[v] = prefix[std::min(v, prefix.size() - 1)];
    h = std::move(next);
  }
  BigInt total = 0;
  for (const BigInt& v : h) total += v;
  return total;
}

// Cells with nothing below and nothing to the right (1-indexed).
inline std::vector<std::pair<int, int>> corner_cells(const Partition& lambda) {
  std::vector<std::pair<int, int>> corners;
  for (int i = 1; i <= lambda.rows(); ++i)
    if (lambda.part(i) > lambda.part(i + 1)) corners.emplace_back(i, lambda.part(i));
  return corners;
}

// ---------------------------------------------------------------------------
// The four shapes attached to a cell (i, j) of λ.

namespace detail {

inline void check_cell(const Partition& lambda, int i, int j) {
  if (i < 1 || i > lambda.rows() || j < 1 || j > lambda.part(i))
    throw std::out_of_range("(" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not a cell of " + lambda.str());
}

inline Partition from_values(std::vector<int> values) {
  // Keep the positive entries; the inputs are non-increasing by construction.
  std::erase_if(values, [](int v) { return v <= 0; });
  return Partition(std::move(values));
}

}  // namespace detail

// Rows 1..i clipped to the first j columns.
inline Partition nw_of(const Partition& lambda, int i, int j) {
  detail::check_cell(lambda, i, j);
  std::vector<int> parts;
  for (int t = 1; t <= i; ++t) parts.push_back(std::min(lambda.part(t), j));
  return detail::from_values(std::move(parts));
}

// Rows above stay, row i is cut to j, rows below are clipped to j-1 columns.
inline Partition se_of(const Partition& lambda, int i, int j) {
  detail::check_cell(lambda, i, j);
  std::vector<int> parts;
  for (int t = 1; t < i; ++t) parts.push_back(lambda.part(t));
  parts.push_back(j);
  for (int t = i + 1; t <= lambda.rows(); ++t)
    parts.push_back(std::min(lambda.part(t), j - 1));
  return detail::from_values(std::move(parts));
}

// What lies strictly right of column j in the rows above row i.
inline Partition ne_of(const Partition& lambda, int i, int j) {
  detail::check_cell(lambda, i, j);
  std::vector<int> parts;
  for (int t = 1; t < i; ++t) parts.push_back(lambda.part(t) - j);
  return detail::from_values(std::move(parts));
}

// What lies strictly below row i, clipped to the first j-1 columns.
inline Partition sw_of(const Partition& lambda, int i, int j) {
  detail::check_cell(lambda, i, j);
  std::vector<int> parts;
  for (int t = i + 1; t <= lambda.rows(); ++t)
    parts.push_back(std::min(lambda.part(t), j - 1));
  return detail::from_values(std::move(parts));
}

// ---------------------------------------------------------------------------
// Edge counts of the ideal lattice.

// Corner-cell product route: each cell contributes the ideals of its
// south-west shape times those of its north-east shape.
inline BigInt young_edges(const Partition& lambda) {
  std::map<std::vector<int>, BigInt> sizes;
  auto size_of = [&sizes](const Partition& p) -> const BigInt& {
    auto [it, fresh] = sizes.try_emplace(p.parts());
    if (fresh) it->second = ideal_size(p);
    return it->second;
  };
  BigInt total = 0;
  for (int i = 1; i <= lambda.rows(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j)
      total += size_of(sw_of(lambda, i, j)) * size_of(ne_of(lambda, i, j));
  return total;
}

// Visit every partition contained in the shape (the lattice elements).
template <typename Visitor>
void for_each_ideal(const Partition& lambda, Visitor&& visit) {
  std::vector<int> mu;
  auto rec = [&](auto&& self, int row, int bound) -> void {
    if (row > lambda.rows() || bound == 0) {
      visit(Partition(mu));
      return;
    }
    self(self, row + 1, 0);  // this row and everything below stay empty
    const int top = std::min(bound, lambda.part(row));
    for (int v = 1; v <= top; ++v) {
      mu.push_back(v);
      self(self, row + 1, v);
      mu.pop_back();
    }
  };
  rec(rec, 1, lambda.rows() == 0 ? 0 : lambda.part(1));
}

inline long long bruteforce_ideal_cap() {
  if (const char* s = std::getenv("HASSE_PATHS_MAX_CELLS")) {
    const long long v = std::atoll(s);
    if (v > 0) return v;
  }
  return 2'000'000;
}

// Sum of corner-cell counts over all ideals: one cover per removable cell.
inline BigInt young_edges_bruteforce(const Partition& lambda, bool force = false) {
  if (!force) {
    const BigInt size = ideal_size(lambda);
    if (size > bruteforce_ideal_cap())
      throw CapExceeded("brute-force edge count over " + size.str() +
                        " ideals exceeds the cap (" +
                        std::to_string(bruteforce_ideal_cap()) +
                        "); set HASSE_PATHS_MAX_CELLS or pass force");
  }
  BigInt total = 0;
  for_each_ideal(lambda, [&total](const Partition& mu) {
    total += static_cast<long long>(corner_cells(mu).size());
  });
  return total;
}

// ---------------------------------------------------------------------------
// Rectangles in closed form.

inline BigInt rect_ideal_size(int m, int n) { return binomial(m + n, n); }

inline BigInt rect_edges(int m, int n) {
  if (m <= 0 || n <= 0) return 0;
  return binomial(m + n - 1, n) * n;
}

}  // namespace hassepaths
