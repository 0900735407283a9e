#pragma once

#include <span>
#include <string>
#include <vector>

#include "grig/enumerate.hpp"

namespace grig {

/// A point of the space of 4-marked groups, restricted to representable
/// contexts; the generating tuple is always the canonical (a,b,c,d).
struct MarkedPoint {
  GroupContext ctx;
};

/// Largest m <= maxLen such that every reduced word of length <= m has the
/// same triviality status in both points; the relator metric distance is
/// then 2^-m (m = maxLen means indistinguishable at this resolution).
unsigned agreement_radius(const MarkedPoint& p, const MarkedPoint& q, unsigned maxLen);

std::vector<unsigned> convergence_table(std::span<const MarkedPoint> points,
                                        const MarkedPoint& target, unsigned maxLen);

/// CSV rows (word-length, agree-flag) followed by "radius=m distance=2^-m".
std::string agreement_report(const MarkedPoint& p, const MarkedPoint& q, unsigned maxLen);

}  // namespace grig
