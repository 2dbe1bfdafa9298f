#include "strata/counts.hpp"

#include <map>
#include <mutex>

#include "strata/error.hpp"
#include "strata/slide.hpp"

namespace strata {

namespace {

void require_full(const Composition& k) {
  check_composition(k);
  if (total(k) != static_cast<int>(k.size())) {
    throw StrataError(ErrorCode::BadComposition, "(" + composition_to_string(k) + ") does not sum to n");
  }
}

bool suffix_bound(const Composition& k, int slack) {
  int suffix = 0;
  const int n = static_cast<int>(k.size());
  for (int i = 1; i <= n; ++i) {
    suffix += k[n - i];
    if (suffix < i - slack) return false;
  }
  return true;
}

}  // namespace

BigInt multinomial(const Composition& k) {
  require_full(k);
  // Product of binomials C(k_1 + ... + k_j, k_j), each exact.
  BigInt result = 1;
  int running = 0;
  for (int part : k) {
    for (int step = 1; step <= part; ++step) {
      ++running;
      result *= running;
      result /= step;
    }
  }
  return result;
}

BigInt asym_multinomial(const Composition& k) {
  require_full(k);
  static std::mutex guard;
  static std::map<Composition, BigInt> cache;
  {
    std::lock_guard lock(guard);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  const BigInt value = slide_set_omega(k).size();
  std::lock_guard lock(guard);
  cache.emplace(k, value);
  return value;
}

bool is_catalan(const Composition& k) { return suffix_bound(k, 0); }
bool is_almost_catalan(const Composition& k) { return suffix_bound(k, 1); }

BigInt double_factorial_odd(int n) {
  BigInt result = 1;
  for (int factor = 2 * n - 1; factor > 1; factor -= 2) result *= factor;
  return result;
}

}  // namespace strata
