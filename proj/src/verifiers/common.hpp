#ifndef TWOPOINT_VERIFIERS_COMMON_HPP
#define TWOPOINT_VERIFIERS_COMMON_HPP

#include <chrono>
#include <span>
#include <string>
#include <vector>

#include "twopoint/element_table.hpp"
#include "twopoint/permutation.hpp"

namespace twopoint::detail
{

class Stopwatch
{
public:
  std::int64_t elapsed_ms() const
  {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - _start)
        .count();
  }

private:
  std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
};

// Whether sigma -> values[0^(sigma^-1)] is multiplicative on every pair of
// `sigmas`: h(st) == h(s) h(t).
inline bool top_homomorphism(ElementTable const &t, std::span<Element const> values,
                             std::vector<Permutation> const &sigmas)
{
  auto h = [&](Permutation const &s) {
    for (Point x = 0; x < s.degree(); ++x) {
      if (s[x] == 0)
        return values[x];
    }
    return values[0];
  };
  std::vector<Element> images;
  for (auto const &s : sigmas)
    images.push_back(h(s));
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    for (std::size_t j = 0; j < sigmas.size(); ++j) {
      if (h(sigmas[i] * sigmas[j]) != t.mul(images[i], images[j]))
        return false;
    }
  }
  return true;
}

} // namespace twopoint::detail

#endif // TWOPOINT_VERIFIERS_COMMON_HPP
