#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace altcoh {

// Largest group order for which element lists are materialized.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 21;

// Raised when an enumeration or search would exceed its configured bound.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Enumeration cap honoring the ALTCOH_ENUMERATION_CAP override.
inline std::uint64_t enumeration_cap_from_env(std::uint64_t fallback = kDefaultEnumerationCap) {
  const char* raw = std::getenv("ALTCOH_ENUMERATION_CAP");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0)
    throw std::invalid_argument("ALTCOH_ENUMERATION_CAP must be a positive integer");
  return v;
}

}  // namespace altcoh
