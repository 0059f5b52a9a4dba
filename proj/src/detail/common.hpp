#pragma once

#include <cstdint>
#include <string>

#include "emanet/emanation.hpp"

namespace emanet::detail {

// Magnitude budget for the int64 fast path; inputs that do not fit fall back
// to full rational arithmetic.
constexpr std::int64_t kLatticeLimit = std::int64_t(1) << 40;

// Pre-scaling keeps every construction integral: x4 covers head-on midpoints,
// diagonal-pair crossings, and crossing-repair points between them.
constexpr int kPrescale = 4;

inline std::string tie_policy_string(const TiePolicy& tie) {
  return tie.kind == TiePolicyKind::Seeded ? "seeded:" + std::to_string(tie.seed) : "lex";
}

}  // namespace emanet::detail
