// FNV-1a digests for determinism checks and log records.
#pragma once

#include <cstdint>
#include <string>

namespace shelfsearch {

inline uint64_t fnv1a64(const void* data, size_t size, uint64_t seed = 0) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = 0xCBF29CE484222325ULL ^ seed;
  for (size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string hex64(uint64_t value);

inline std::string hex_digest(const std::string& bytes) {
  return hex64(fnv1a64(bytes.data(), bytes.size()));
}

}  // namespace shelfsearch
