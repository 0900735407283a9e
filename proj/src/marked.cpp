#include "grig/marked.hpp"

namespace grig {

namespace {

bool lengths_agree(const MarkedPoint& p, const MarkedPoint& q, unsigned len) {
  for (const Word& w : reduced_words_up_to(len)) {
    if (w.length() != len) continue;
    if (trivial_in(p.ctx, w) != trivial_in(q.ctx, w)) return false;
  }
  return true;
}

}  // namespace

unsigned agreement_radius(const MarkedPoint& p, const MarkedPoint& q, unsigned maxLen) {
  for (unsigned m = 1; m <= maxLen; ++m)
    if (!lengths_agree(p, q, m)) return m - 1;
  return maxLen;
}

std::vector<unsigned> convergence_table(std::span<const MarkedPoint> points,
                                        const MarkedPoint& target, unsigned maxLen) {
  std::vector<unsigned> radii;
  radii.reserve(points.size());
  for (const MarkedPoint& p : points) radii.push_back(agreement_radius(p, target, maxLen));
  return radii;
}

std::string agreement_report(const MarkedPoint& p, const MarkedPoint& q, unsigned maxLen) {
  std::string out = "length,agree\n";
  unsigned radius = maxLen;
  bool broken = false;
  for (unsigned m = 1; m <= maxLen; ++m) {
    bool agree = !broken && lengths_agree(p, q, m);
    if (!agree && !broken) {
      broken = true;
      radius = m - 1;
    }
    out += std::to_string(m) + "," + (agree ? "1" : "0") + "\n";
  }
  out += "radius=" + std::to_string(radius) + " distance=2^-" + std::to_string(radius) + "\n";
  return out;
}

}  // namespace grig
