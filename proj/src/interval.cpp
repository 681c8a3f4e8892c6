#include "structiou/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace structiou {

OpenInterval::OpenInterval(double start, double end) : start_(start), end_(end) {
  if (!std::isfinite(start) || !std::isfinite(end) ||
      !(end - start > kMinIntervalLength)) {
    throw std::invalid_argument("degenerate interval (" + std::to_string(start) +
                                ", " + std::to_string(end) + ")");
  }
}

double intersection_size(const OpenInterval& a, const OpenInterval& b) noexcept {
  const double lo = std::max(a.start(), b.start());
  const double hi = std::min(a.end(), b.end());
  return hi > lo ? hi - lo : 0.0;
}

double union_size(const OpenInterval& a, const OpenInterval& b) noexcept {
  return a.length() + b.length() - intersection_size(a, b);
}

double iou(const OpenInterval& a, const OpenInterval& b) noexcept {
  return intersection_size(a, b) / union_size(a, b);
}

}  // namespace structiou
