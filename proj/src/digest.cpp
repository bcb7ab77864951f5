#include "shelfsearch/digest.hpp"

#include <cstdio>

namespace shelfsearch {

std::string hex64(uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(value));
  return std::string(buf);
}

}  // namespace shelfsearch
