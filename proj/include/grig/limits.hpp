#pragma once

#include <cstddef>

namespace grig {

// Desk-scale guardrails. Exceeding any of them raises a loud error.
inline constexpr int kTreeDepthCap = 24;
inline constexpr int kOrderCapExponent = 20;
inline constexpr std::size_t kRecursionBudget = 1'000'000;
inline constexpr int kBallRadiusCap = 12;

} // namespace grig
