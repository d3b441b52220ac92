#ifndef TWOPOINT_BUDGET_HPP
#define TWOPOINT_BUDGET_HPP

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace twopoint
{

// Raised by any operation that would exceed its enumeration budget. Callers
// treat it as "infeasible at this budget", never as a mathematical answer.
class Infeasible : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Setup is wrong (ingredient or hypothesis failed), as opposed to a claim
// being false.
class PreconditionError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Counts basic operations (elements enumerated, cosets created, candidates
// scanned, search nodes). Thread-safe.
class Budget
{
public:
  static constexpr std::uint64_t default_limit = 20'000'000;

  explicit Budget(std::uint64_t limit = default_limit)
  : _limit(limit)
  {}

  Budget(Budget const &other)
  : _limit(other._limit), _used(other._used.load())
  {}

  // TWOPOINT_BUDGET overrides the default limit when set.
  static Budget from_environment();

  void charge(std::uint64_t amount, char const *what)
  {
    auto used = _used.fetch_add(amount, std::memory_order_relaxed) + amount;
    if (used > _limit)
      throw Infeasible(std::string(what) + ": budget of " +
                       std::to_string(_limit) + " operations exceeded");
  }

  std::uint64_t limit() const { return _limit; }
  std::uint64_t used() const { return _used.load(std::memory_order_relaxed); }

private:
  std::uint64_t _limit;
  std::atomic<std::uint64_t> _used{0};
};

} // namespace twopoint

#endif // TWOPOINT_BUDGET_HPP
