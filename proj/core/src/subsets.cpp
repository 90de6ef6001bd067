#include <rwls/decomposition.hpp>

#include <rwls/errors.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace rwls {

std::uint64_t binomial(Index m, Index n) {
  if (n < 0 || m < 0 || n > m) return 0;
  n = std::min(n, m - n);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (Index i = 1; i <= n; ++i) {
    const auto num = static_cast<std::uint64_t>(m - n + i);
    // r * num / i stays exact because r * num is divisible by i
    const std::uint64_t g = std::gcd(r, static_cast<std::uint64_t>(i));
    const std::uint64_t a = r / g;
    const std::uint64_t b = num / (static_cast<std::uint64_t>(i) / g);
    if (a != 0 && b > kMax / a) return kMax;
    r = a * b;
  }
  return r;
}

void for_each_subset(Index m, Index n, const std::function<void(std::span<const Index>)>& visit,
                     std::uint64_t cap) {
  if (n < 1 || n > m) {
    std::ostringstream os;
    os << "subsets: need 1 <= n <= m, got n=" << n << " m=" << m;
    throw InvalidArgument(os.str());
  }
  const std::uint64_t count = binomial(m, n);
  if (count > cap) {
    std::ostringstream os;
    os << "subsets: C(" << m << ", " << n << ") = " << count << " exceeds the cap of " << cap;
    throw CombinatorialCapError(os.str());
  }
  std::vector<Index> k(static_cast<std::size_t>(n));
  std::iota(k.begin(), k.end(), Index{0});
  while (true) {
    visit(k);
    Index i = n - 1;
    while (i >= 0 && k[static_cast<std::size_t>(i)] == m - n + i) --i;
    if (i < 0) break;
    ++k[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < n; ++j) k[static_cast<std::size_t>(j)] = k[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<std::vector<Index>> enumerate_subsets(Index m, Index n, std::uint64_t cap) {
  std::vector<std::vector<Index>> out;
  for_each_subset(m, n, [&](std::span<const Index> k) { out.emplace_back(k.begin(), k.end()); }, cap);
  return out;
}

}  // namespace rwls
