#pragma once

// Exact algebra on finite unions of real intervals: the sets E on which the
// truncated Fourier operator lives.  All values are immutable after
// construction and safe to share between threads.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ftrunc {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
};

// Finite union of disjoint intervals, kept sorted.  Touching or overlapping
// intervals merge on construction; gaps below merge_eps collapse so that
// arithmetic on irrational endpoints (sqrt(2*pi) shifts) cannot leave
// spurious slivers behind.
class IntervalSet {
 public:
  static constexpr double merge_eps = 1e-12;

  IntervalSet() = default;

  // Sorts, merges and validates.  Throws std::invalid_argument on an
  // interval with lo >= hi or a non-finite endpoint.
  static IntervalSet normalized(std::vector<Interval> raw);

  const std::vector<Interval>& intervals() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  double measure() const;

  // Bounding box; requires a non-empty set.
  double lo() const;
  double hi() const;

  bool contains(double t) const;

  bool operator==(const IntervalSet&) const = default;

 private:
  std::vector<Interval> parts_;
};

IntervalSet negate(const IntervalSet& s);
IntervalSet translate(const IntervalSet& s, double h);
IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersection(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);
IntervalSet symmetric_difference(const IntervalSet& a, const IntervalSet& b);

// mes Delta(S, -S) <= tol
bool is_symmetric(const IntervalSet& s, double tol = 0.0);

// E_j = E cap [j - 1/2, j + 1/2]; only cells of positive measure appear.
std::vector<std::pair<std::int64_t, IntervalSet>> unit_cells(const IntervalSet& s);

// Union over |p| <= P of [-a, a] + p*sqrt(2*pi).  Requires 0 < a < sqrt(pi/2).
IntervalSet periodic_set(double a, int P);

// Textual literal "[a,b]∪[c,d]" with shortest round-trip decimals; the empty
// set prints as "∅".  parse_literal also accepts 'u'/'U' as the union
// separator and a JSON object {"intervals":[[a,b],...]}.
std::string to_literal(const IntervalSet& s);
IntervalSet parse_literal(std::string_view text);

}  // namespace ftrunc
