#include "tropical/tropdet.hpp"

#include <cstdlib>
#include <string>

namespace tropical {

int default_enumeration_limit() {
  static const int limit = [] {
    const char* env = std::getenv("TROPICAL_ENUM_LIMIT");
    if (env == nullptr) return 8;
    try {
      const int value = std::stoi(env);
      return value >= 1 ? value : 8;
    } catch (const std::exception&) {
      return 8;
    }
  }();
  return limit;
}

int permutation_sign(std::span<const int> perm) {
  const std::size_t n = perm.size();
  std::vector<char> seen(n, 0);
  std::size_t transpositions = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(perm[i])) {
      seen[i] = 1;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

}  // namespace tropical
