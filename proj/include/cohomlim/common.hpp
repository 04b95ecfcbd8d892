#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohomlim {

/// Input failed a structural or algebraic precondition. The code() is a
/// stable machine-readable tag (e.g. "NotAssociative"); what() appends the
/// first witness found.
class validation_error : public std::runtime_error {
 public:
  validation_error(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// An enumeration was refused because its candidate-count estimate exceeds
/// the configured budget. Raised before any work is done.
class budget_error : public std::runtime_error {
 public:
  budget_error(long long estimate, long long budget)
      : std::runtime_error("BudgetExceeded: estimated " + std::to_string(estimate) +
                           " candidates, budget " + std::to_string(budget)),
        estimate_(estimate),
        budget_(budget) {}
  long long estimate() const { return estimate_; }
  long long budget() const { return budget_; }

 private:
  long long estimate_;
  long long budget_;
};

struct Budget {
  long long max_candidates = 10'000'000;
};

/// base^exp, saturating at limit+1 so oversize estimates stay comparable
/// without overflowing.
inline long long checked_pow(long long base, long long exp, long long limit) {
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

inline void require_budget(long long estimate, const Budget& budget) {
  if (estimate > budget.max_candidates) throw budget_error(estimate, budget.max_candidates);
}

namespace detail {

template <typename T>
void format_arg(std::ostringstream& os, const T& t) {
  os << t;
}

}  // namespace detail

template <typename... Args>
std::string witness(const Args&... args) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  ((os << (first ? "" : ","), first = false, detail::format_arg(os, args)), ...);
  os << ")";
  return os.str();
}

/// Deterministic xorshift generator for the randomized test tiers; never
/// seeded from the clock.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

}  // namespace cohomlim
