#include "oracles.hpp"

namespace cattkit::testing {

std::uint64_t dyck_paths_brute(std::size_t k) {
  const std::size_t n = 2 * k;
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    long height = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      height += (bits >> i) & 1 ? 1 : -1;
      ok = height >= 0;
    }
    if (ok && height == 0) ++count;
  }
  return count;
}

std::uint64_t zigzags_brute(std::size_t n) {
  if (n == 0) return 0;
  // A smooth sequence of length n never climbs above n / 2.
  const std::size_t top = n / 2;
  std::vector<std::size_t> seq(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = seq.front() == 0 && seq.back() == 0;
    for (std::size_t i = 1; i < n && ok; ++i) {
      const long d = static_cast<long>(seq[i]) - static_cast<long>(seq[i - 1]);
      ok = d == 1 || d == -1;
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < n && seq[i] == top) seq[i++] = 0;
    if (i == n) break;
    ++seq[i];
  }
  return count;
}

std::uint64_t catalan(std::size_t k) {
  std::uint64_t binom = 1;
  for (std::size_t i = 0; i < k; ++i) binom = binom * (2 * k - i) / (i + 1);
  return binom / (k + 1);
}

}  // namespace cattkit::testing
