#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gradlpa {

// Booth's algorithm: start index of the lexicographically least rotation of
// `s`. Ties between equal rotations resolve to the smallest index. O(n).
template <typename T>
std::size_t least_rotation(std::span<const T> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<std::ptrdiff_t> fail(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) -> const T& { return s[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && !(at(j) == at(k + i + 1))) {
      if (at(j) < at(k + i + 1)) k = j - i - 1;
      i = fail[i];
    }
    if (i == -1 && !(at(j) == at(k + i + 1))) {
      if (at(j) < at(k + i + 1)) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

template <typename T>
std::size_t least_rotation(const std::vector<T>& s) {
  return least_rotation(std::span<const T>(s.data(), s.size()));
}

}  // namespace gradlpa
