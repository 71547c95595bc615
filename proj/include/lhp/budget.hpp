#pragma once

#include <atomic>
#include <cstdint>
#include <string>

#include "lhp/enumeration.hpp"

namespace lhp {

/// Process-wide cap on the number of objects one enumeration may visit.
inline std::atomic<std::uint64_t>& enumeration_budget() {
  static std::atomic<std::uint64_t> budget{10'000'000};
  return budget;
}

inline void require_within_budget(const Int& count, const std::string& what) {
  if (count > Int(std::to_string(enumeration_budget().load()))) throw BudgetExceeded(what + " exceeds the enumeration budget");
}

}  // namespace lhp
