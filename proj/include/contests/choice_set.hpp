#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace contests {

/// Closed interval [lo, hi] of feasible efforts; lo == hi is a single point.
struct Segment {
  double lo = 0.0;
  double hi = 0.0;

  bool is_point() const { return lo == hi; }

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Union of finitely many disjoint closed segments of nonnegative efforts,
/// kept in strictly increasing order. This is the feasible set a player
/// chooses from; it is allowed to be non-convex (gaps are the interesting
/// case) but must be closed, so open gaps between segments are fine while
/// half-open segments are not representable.
class ChoiceSet {
 public:
  explicit ChoiceSet(std::vector<Segment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) {
      throw std::invalid_argument("choice set must contain at least one segment");
    }
    for (std::size_t k = 0; k < segments_.size(); ++k) {
      const Segment& s = segments_[k];
      if (!std::isfinite(s.lo) || !std::isfinite(s.hi)) {
        throw std::invalid_argument("choice set bounds must be finite");
      }
      if (s.lo < 0.0) {
        throw std::invalid_argument("choice set bounds must be nonnegative");
      }
      if (s.hi < s.lo) {
        throw std::invalid_argument("segment upper bound below its lower bound");
      }
      if (k > 0 && segments_[k - 1].hi >= s.lo) {
        throw std::invalid_argument(
            "segments must be disjoint and strictly increasing; merge touching segments");
      }
    }
  }

  static ChoiceSet points(std::vector<double> values) {
    std::vector<Segment> segs;
    segs.reserve(values.size());
    for (double x : values) segs.push_back({x, x});
    return ChoiceSet(std::move(segs));
  }

  static ChoiceSet points(std::initializer_list<double> values) {
    return points(std::vector<double>(values));
  }

  const std::vector<Segment>& segments() const { return segments_; }

  double min() const { return segments_.front().lo; }
  double max() const { return segments_.back().hi; }

  /// Exact closed-interval membership, no tolerance.
  bool contains(double e) const {
    for (const Segment& s : segments_) {
      if (e >= s.lo && e <= s.hi) return true;
      if (e < s.lo) break;
    }
    return false;
  }

  bool all_points() const {
    for (const Segment& s : segments_) {
      if (!s.is_point()) return false;
    }
    return true;
  }

  /// The segment values when every segment is a point; throws otherwise.
  std::vector<double> as_points() const {
    std::vector<double> out;
    out.reserve(segments_.size());
    for (const Segment& s : segments_) {
      if (!s.is_point()) {
        throw std::invalid_argument("choice set has interval segments, not a finite point list");
      }
      out.push_back(s.lo);
    }
    return out;
  }

 private:
  std::vector<Segment> segments_;
};

}  // namespace contests
