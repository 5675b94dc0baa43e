#include "ftrunc/interval_set.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "json.hpp"

namespace ftrunc {

IntervalSet IntervalSet::normalized(std::vector<Interval> raw) {
  for (const auto& iv : raw) {
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
      throw std::invalid_argument("interval endpoint is not finite");
    if (!(iv.lo < iv.hi))
      throw std::invalid_argument("interval requires lo < hi");
  }
  std::sort(raw.begin(), raw.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet out;
  for (const auto& iv : raw) {
    if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi + merge_eps) {
      out.parts_.back().hi = std::max(out.parts_.back().hi, iv.hi);
    } else {
      out.parts_.push_back(iv);
    }
  }
  return out;
}

double IntervalSet::measure() const {
  double m = 0.0;
  for (const auto& iv : parts_) m += iv.length();
  return m;
}

double IntervalSet::lo() const {
  if (parts_.empty()) throw std::logic_error("empty set has no bounding box");
  return parts_.front().lo;
}

double IntervalSet::hi() const {
  if (parts_.empty()) throw std::logic_error("empty set has no bounding box");
  return parts_.back().hi;
}

bool IntervalSet::contains(double t) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), t,
                             [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == parts_.begin()) return false;
  --it;
  return t > it->lo && t < it->hi;
}

IntervalSet negate(const IntervalSet& s) {
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const auto& iv : s.intervals()) out.push_back({-iv.hi, -iv.lo});
  return IntervalSet::normalized(std::move(out));
}

IntervalSet translate(const IntervalSet& s, double h) {
  std::vector<Interval> out;
  out.reserve(s.size());
  for (const auto& iv : s.intervals()) out.push_back({iv.lo + h, iv.hi + h});
  return IntervalSet::normalized(std::move(out));
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all(a.intervals());
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  if (all.empty()) return {};
  return IntervalSet::normalized(std::move(all));
}

IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  auto ia = a.intervals().begin(), ib = b.intervals().begin();
  while (ia != a.intervals().end() && ib != b.intervals().end()) {
    const double lo = std::max(ia->lo, ib->lo);
    const double hi = std::min(ia->hi, ib->hi);
    if (lo < hi) out.push_back({lo, hi});
    if (ia->hi < ib->hi) ++ia; else ++ib;
  }
  if (out.empty()) return {};
  return IntervalSet::normalized(std::move(out));
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  for (const auto& iv : a.intervals()) {
    double cursor = iv.lo;
    for (const auto& cut : b.intervals()) {
      if (cut.hi <= cursor) continue;
      if (cut.lo >= iv.hi) break;
      if (cut.lo > cursor) out.push_back({cursor, std::min(cut.lo, iv.hi)});
      cursor = std::max(cursor, cut.hi);
      if (cursor >= iv.hi) break;
    }
    if (cursor < iv.hi) out.push_back({cursor, iv.hi});
  }
  if (out.empty()) return {};
  return IntervalSet::normalized(std::move(out));
}

IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b) {
  return set_union(set_difference(a, b), set_difference(b, a));
}

bool is_symmetric(const IntervalSet& s, double tol) {
  return symmetric_difference(s, negate(s)).measure() <= tol;
}

std::vector<std::pair<std::int64_t, IntervalSet>> unit_cells(const IntervalSet& s) {
  std::vector<std::pair<std::int64_t, IntervalSet>> cells;
  if (s.empty()) return cells;
  const auto j_lo = static_cast<std::int64_t>(std::floor(s.lo() + 0.5));
  const auto j_hi = static_cast<std::int64_t>(std::ceil(s.hi() - 0.5));
  for (std::int64_t j = j_lo; j <= j_hi; ++j) {
    const double lo = static_cast<double>(j) - 0.5;
    const IntervalSet cell_window = IntervalSet::normalized({{lo, lo + 1.0}});
    IntervalSet cell = set_intersection(s, cell_window);
    if (cell.measure() > 0.0) cells.emplace_back(j, std::move(cell));
  }
  return cells;
}

IntervalSet periodic_set(double a, int P) {
  const double half_period = std::sqrt(std::numbers::pi / 2.0);
  if (!(a > 0.0 && a < half_period))
    throw std::invalid_argument("periodic_set requires 0 < a < sqrt(pi/2)");
  if (P < 0) throw std::invalid_argument("periodic_set requires P >= 0");
  const double period = std::sqrt(2.0 * std::numbers::pi);
  std::vector<Interval> parts;
  parts.reserve(2 * P + 1);
  for (int p = -P; p <= P; ++p) {
    const double c = static_cast<double>(p) * period;
    parts.push_back({-a + c, a + c});
  }
  return IntervalSet::normalized(std::move(parts));
}

namespace {

std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

void skip_ws(std::string_view& sv) {
  while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
}

double parse_number(std::string_view& sv) {
  skip_ws(sv);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
  if (ec != std::errc{}) throw std::invalid_argument("bad number in set literal");
  sv.remove_prefix(static_cast<std::size_t>(ptr - sv.data()));
  return value;
}

bool consume_union(std::string_view& sv) {
  skip_ws(sv);
  if (sv.empty()) return false;
  if (sv.front() == 'u' || sv.front() == 'U') { sv.remove_prefix(1); return true; }
  static constexpr std::string_view cup = "\xe2\x88\xaa";  // U+222A
  if (sv.starts_with(cup)) { sv.remove_prefix(cup.size()); return true; }
  return false;
}

IntervalSet parse_json_set(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.contains("intervals") || !j["intervals"].is_array())
    throw std::invalid_argument("set JSON needs an \"intervals\" array");
  std::vector<Interval> parts;
  for (const auto& pair : j["intervals"]) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("each interval must be [lo, hi]");
    parts.push_back({pair[0].get<double>(), pair[1].get<double>()});
  }
  return IntervalSet::normalized(std::move(parts));
}

}  // namespace

std::string to_literal(const IntervalSet& s) {
  if (s.empty()) return "\xe2\x88\x85";  // U+2205
  std::string out;
  bool first = true;
  for (const auto& iv : s.intervals()) {
    if (!first) out += "\xe2\x88\xaa";
    first = false;
    out += '[';
    out += format_double(iv.lo);
    out += ',';
    out += format_double(iv.hi);
    out += ']';
  }
  return out;
}

IntervalSet parse_literal(std::string_view text) {
  std::string_view sv = text;
  skip_ws(sv);
  if (sv.empty()) throw std::invalid_argument("empty set literal");
  if (sv.front() == '{') return parse_json_set(sv);
  if (sv.starts_with("\xe2\x88\x85")) {
    sv.remove_prefix(3);
    skip_ws(sv);
    if (!sv.empty()) throw std::invalid_argument("trailing text after empty set");
    return {};
  }
  std::vector<Interval> parts;
  while (true) {
    skip_ws(sv);
    if (sv.empty() || sv.front() != '[')
      throw std::invalid_argument("expected '[' in set literal");
    sv.remove_prefix(1);
    const double lo = parse_number(sv);
    skip_ws(sv);
    if (sv.empty() || sv.front() != ',')
      throw std::invalid_argument("expected ',' in interval");
    sv.remove_prefix(1);
    const double hi = parse_number(sv);
    skip_ws(sv);
    if (sv.empty() || sv.front() != ']')
      throw std::invalid_argument("expected ']' in interval");
    sv.remove_prefix(1);
    parts.push_back({lo, hi});
    if (!consume_union(sv)) break;
  }
  skip_ws(sv);
  if (!sv.empty()) throw std::invalid_argument("trailing text in set literal");
  return IntervalSet::normalized(std::move(parts));
}

}  // namespace ftrunc
