#pragma once

namespace structiou {

/// Intervals shorter than this are rejected on construction.
inline constexpr double kMinIntervalLength = 1e-9;

/// A real-valued open interval (start, end), in seconds or abstract word units.
class OpenInterval {
 public:
  /// Throws std::invalid_argument unless end - start > kMinIntervalLength.
  OpenInterval(double start, double end);

  double start() const noexcept { return start_; }
  double end() const noexcept { return end_; }
  double length() const noexcept { return end_ - start_; }

  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;

 private:
  double start_;
  double end_;
};

/// Zero when the intervals are disjoint; touching endpoints count as disjoint.
double intersection_size(const OpenInterval& a, const OpenInterval& b) noexcept;
double union_size(const OpenInterval& a, const OpenInterval& b) noexcept;
double iou(const OpenInterval& a, const OpenInterval& b) noexcept;

inline bool disjoint(const OpenInterval& a, const OpenInterval& b) noexcept {
  return a.end() <= b.start() || b.end() <= a.start();
}

inline bool contains(const OpenInterval& outer, const OpenInterval& inner) noexcept {
  return outer.start() <= inner.start() && inner.end() <= outer.end();
}

}  // namespace structiou
