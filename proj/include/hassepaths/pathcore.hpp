#pragma once

// Path words and path classes.  A path is a word over {U, D, H} where U
// rises by 1, D falls by 1, and H is flat — of width 1 (Motzkin-like
// classes) or width 2 (Schröder-like classes).  A class fixes the allowed
// steps, a height window, whether flats are restricted to the axis, and
// whether size is measured in semilength (half the width) or in steps.
// Enumeration is depth-first in the canonical step order U < D < H, which
// yields words in lexicographic order.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hassepaths {

enum class StepKind : std::uint8_t { Up = 0, Down = 1, FlatUnit = 2, FlatDouble = 3 };

constexpr int step_width(StepKind k) { return k == StepKind::FlatDouble ? 2 : 1; }

constexpr int step_rise(StepKind k) {
  return k == StepKind::Up ? 1 : k == StepKind::Down ? -1 : 0;
}

constexpr char step_letter(StepKind k) {
  return k == StepKind::Up ? 'U' : k == StepKind::Down ? 'D' : 'H';
}

enum class PathClass {
  Dyck,
  GrandDyck,
  Motzkin,
  GrandMotzkin,
  Schroeder,
  GrandSchroeder,
  Fibonacci,
  GrandFibonacci,
};

struct ClassSpec {
  PathClass id;
  const char* code;  // two-letter tag used by the CLI ("DD", "GD", ...)
  const char* name;
  std::vector<StepKind> steps;  // allowed steps, in canonical order
  std::optional<int> min_height;
  std::optional<int> max_height;
  bool flats_on_axis_only;
  bool semilength;  // size n means width 2n; otherwise width (= steps) n

  bool grand() const { return !min_height.has_value() || *min_height < 0; }

  long width_for_size(long n) const { return semilength ? 2 * n : n; }

  bool has_step(StepKind k) const {
    for (StepKind s : steps)
      if (s == k) return true;
    return false;
  }

  // The flat step this class uses, if any (no class mixes both widths).
  std::optional<StepKind> flat_step() const {
    if (has_step(StepKind::FlatUnit)) return StepKind::FlatUnit;
    if (has_step(StepKind::FlatDouble)) return StepKind::FlatDouble;
    return std::nullopt;
  }
};

inline const ClassSpec& class_spec(PathClass c) {
  using enum StepKind;
  static const std::array<ClassSpec, 8> table = {{
      {PathClass::Dyck, "DD", "Dyck", {Up, Down}, 0, std::nullopt, false, true},
      {PathClass::GrandDyck, "GD", "grand Dyck", {Up, Down}, std::nullopt, std::nullopt, false, true},
      {PathClass::Motzkin, "MM", "Motzkin", {Up, Down, FlatUnit}, 0, std::nullopt, false, false},
      {PathClass::GrandMotzkin, "GM", "grand Motzkin", {Up, Down, FlatUnit}, std::nullopt, std::nullopt, false, false},
      {PathClass::Schroeder, "SS", "Schroeder", {Up, Down, FlatDouble}, 0, std::nullopt, false, true},
      {PathClass::GrandSchroeder, "GS", "grand Schroeder", {Up, Down, FlatDouble}, std::nullopt, std::nullopt, false, true},
      {PathClass::Fibonacci, "FF", "Fibonacci", {Up, Down, FlatUnit}, 0, 1, true, false},
      {PathClass::GrandFibonacci, "GF", "grand Fibonacci", {Up, Down, FlatUnit}, -1, 1, true, false},
  }};
  return table[static_cast<size_t>(c)];
}

inline const std::array<PathClass, 8>& all_classes() {
  static const std::array<PathClass, 8> a = {
      PathClass::Dyck,      PathClass::GrandDyck,      PathClass::Motzkin,
      PathClass::GrandMotzkin, PathClass::Schroeder,   PathClass::GrandSchroeder,
      PathClass::Fibonacci, PathClass::GrandFibonacci,
  };
  return a;
}

inline std::optional<PathClass> class_from_code(std::string_view code) {
  for (PathClass c : all_classes())
    if (code == class_spec(c).code) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

class PathWord {
 public:
  PathWord() = default;
  explicit PathWord(std::vector<StepKind> steps) : steps_(std::move(steps)) {}

  const std::vector<StepKind>& steps() const { return steps_; }
  size_t step_count() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  long width() const {
    long w = 0;
    for (StepKind s : steps_) w += step_width(s);
    return w;
  }

  // Ordinates of the profile at integer abscissae 0..width (width+1 values);
  // a FlatDouble contributes its level at both interior unit marks.
  std::vector<int> heights() const {
    std::vector<int> h;
    h.reserve(width() + 1);
    h.push_back(0);
    int cur = 0;
    for (StepKind s : steps_) {
      if (s == StepKind::FlatDouble) {
        h.push_back(cur);
        h.push_back(cur);
      } else {
        cur += step_rise(s);
        h.push_back(cur);
      }
    }
    return h;
  }

  // Height at which step i starts (one entry per step).
  std::vector<int> step_start_heights() const {
    std::vector<int> h;
    h.reserve(steps_.size());
    int cur = 0;
    for (StepKind s : steps_) {
      h.push_back(cur);
      cur += step_rise(s);
    }
    return h;
  }

  int final_height() const {
    int cur = 0;
    for (StepKind s : steps_) cur += step_rise(s);
    return cur;
  }

  // Serialized form: one letter per step, "-" for the empty path.
  std::string str() const {
    if (steps_.empty()) return "-";
    std::string s;
    s.reserve(steps_.size());
    for (StepKind k : steps_) s.push_back(step_letter(k));
    return s;
  }

  bool operator==(const PathWord&) const = default;
  auto operator<=>(const PathWord&) const = default;  // lexicographic, U < D < H

 private:
  std::vector<StepKind> steps_;
};

// Parse a serialized word; 'H' maps to the class's flat step.
inline PathWord parse_path(std::string_view text, const ClassSpec& spec) {
  if (text == "-") return PathWord{};
  std::vector<StepKind> steps;
  steps.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'U': steps.push_back(StepKind::Up); break;
      case 'D': steps.push_back(StepKind::Down); break;
      case 'H': {
        const auto flat = spec.flat_step();
        if (!flat)
          throw std::invalid_argument(std::string("class ") + spec.code + " has no flat step");
        steps.push_back(*flat);
        break;
      }
      default:
        throw std::invalid_argument(std::string("unknown step letter '") + ch + "'");
    }
  }
  return PathWord(std::move(steps));
}

struct ValidationResult {
  bool ok;
  std::string diagnostic;  // "ok", or the first violation found
};

inline ValidationResult validate(const ClassSpec& spec, const PathWord& w) {
  int h = 0;
  size_t idx = 0;
  for (StepKind s : w.steps()) {
    if (!spec.has_step(s))
      return {false, "step " + std::to_string(idx) + ": '" + std::string(1, step_letter(s)) +
                         "' (width " + std::to_string(step_width(s)) + ") not allowed in " + spec.code};
    if (spec.flats_on_axis_only && step_rise(s) == 0 && h != 0)
      return {false, "step " + std::to_string(idx) + ": flat at height " + std::to_string(h) +
                         ", but " + spec.code + " keeps flats on the axis"};
    h += step_rise(s);
    if (spec.min_height && h < *spec.min_height)
      return {false, "step " + std::to_string(idx) + ": height " + std::to_string(h) +
                         " below floor " + std::to_string(*spec.min_height)};
    if (spec.max_height && h > *spec.max_height)
      return {false, "step " + std::to_string(idx) + ": height " + std::to_string(h) +
                         " above ceiling " + std::to_string(*spec.max_height)};
    ++idx;
  }
  if (h != 0) return {false, "path ends at height " + std::to_string(h) + ", not 0"};
  if (spec.semilength && w.width() % 2 != 0)
    return {false, "width " + std::to_string(w.width()) + " is odd in a semilength class"};
  return {true, "ok"};
}

// All class members of the given size, in lexicographic (canonical) order.
inline std::vector<PathWord> enumerate_class(const ClassSpec& spec, long n) {
  if (n < 0) throw std::invalid_argument("negative size");
  const long total = spec.width_for_size(n);
  std::vector<PathWord> out;
  std::vector<StepKind> cur;
  // Classes whose flat step (if any) has even width can only absorb an even
  // amount of width beyond the mandatory |h| return steps.
  const bool even_fill = !spec.has_step(StepKind::FlatUnit);

  auto feasible = [&](int h, long rem) {
    const long dist = h < 0 ? -static_cast<long>(h) : h;
    if (dist > rem) return false;
    if (even_fill && (rem - dist) % 2 != 0) return false;
    return true;
  };

  auto dfs = [&](auto&& self, int h, long rem) -> void {
    if (rem == 0) {
      if (h == 0) out.emplace_back(cur);
      return;
    }
    for (StepKind s : spec.steps) {
      if (step_width(s) > rem) continue;
      if (spec.flats_on_axis_only && step_rise(s) == 0 && h != 0) continue;
      const int h2 = h + step_rise(s);
      if (spec.min_height && h2 < *spec.min_height) continue;
      if (spec.max_height && h2 > *spec.max_height) continue;
      const long rem2 = rem - step_width(s);
      if (!feasible(h2, rem2)) continue;
      cur.push_back(s);
      self(self, h2, rem2);
      cur.pop_back();
    }
  };

  dfs(dfs, 0, total);
  return out;
}

// Overlapping occurrences of the factor word (as a step sequence) in w.
inline long occurrences(const PathWord& w, const PathWord& factor) {
  if (factor.empty()) throw std::invalid_argument("empty factor");
  const auto& ws = w.steps();
  const auto& fs = factor.steps();
  if (fs.size() > ws.size()) return 0;
  long count = 0;
  for (size_t p = 0; p + fs.size() <= ws.size(); ++p) {
    bool match = true;
    for (size_t i = 0; i < fs.size(); ++i)
      if (ws[p + i] != fs[i]) { match = false; break; }
    if (match) ++count;
  }
  return count;
}

// Occurrences that start at nonzero height.  Only meaningful (and only
// accepted) for level-balanced factors, where "the height the factor sits
// at" is well defined along its whole extent.
inline long occurrences_off_axis(const PathWord& w, const PathWord& factor) {
  if (factor.empty()) throw std::invalid_argument("empty factor");
  if (factor.final_height() != 0)
    throw std::invalid_argument("off-axis occurrence count needs a level-balanced factor");
  const auto& ws = w.steps();
  const auto& fs = factor.steps();
  if (fs.size() > ws.size()) return 0;
  const std::vector<int> start = w.step_start_heights();
  long count = 0;
  for (size_t p = 0; p + fs.size() <= ws.size(); ++p) {
    if (start[p] == 0) continue;
    bool match = true;
    for (size_t i = 0; i < fs.size(); ++i)
      if (ws[p + i] != fs[i]) { match = false; break; }
    if (match) ++count;
  }
  return count;
}

// Swap rises and falls.  An involution; on Grand classes it stays inside
// the class and exchanges the up-set and down-set structure.
inline PathWord reflect(const PathWord& w) {
  std::vector<StepKind> steps = w.steps();
  for (StepKind& s : steps) {
    if (s == StepKind::Up) s = StepKind::Down;
    else if (s == StepKind::Down) s = StepKind::Up;
  }
  return PathWord(std::move(steps));
}

}  // namespace hassepaths
