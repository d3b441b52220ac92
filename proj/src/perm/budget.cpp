#include "twopoint/budget.hpp"

#include <cstdlib>

namespace twopoint
{

Budget Budget::from_environment()
{
  if (char const *value = std::getenv("TWOPOINT_BUDGET")) {
    char *end = nullptr;
    unsigned long long limit = std::strtoull(value, &end, 10);
    if (end != value && *end == '\0' && limit > 0)
      return Budget(limit);
  }
  return Budget();
}

} // namespace twopoint
