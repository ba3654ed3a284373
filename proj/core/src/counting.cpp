#include "cuberep/counting.hpp"

#include <cmath>
#include <string>

#include "cuberep/error.hpp"

namespace cuberep {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

MiddleMassReport middle_mass_bound(int n) {
  if (n < 1) throw InvalidArgument("middle_mass_bound needs n >= 1");
  MiddleMassReport r;
  r.n = n;
  for (int i = 0; i <= n; ++i)
    if (4 * i < n || 4 * i > 3 * n) r.count += binomial(n, i);
  r.bound = std::pow(1.9, n) * n;
  BigInt lhs = r.count;
  BigInt rhs = n;
  for (int i = 0; i < n; ++i) {
    lhs *= 10;
    rhs *= 19;
  }
  r.ok = lhs <= rhs;
  return r;
}

IdentityReport count_identity_check(int n, int j, int k) {
  if (!(0 <= k && k <= j + 1 && j + 1 <= n))
    throw InvalidArgument("count identity needs 0 <= k <= j+1 <= n (got n=" + std::to_string(n) +
                          ", j=" + std::to_string(j) + ", k=" + std::to_string(k) + ")");
  IdentityReport r;
  r.lhs = binomial(n, j + 1) * binomial(j + 1, k);
  r.rhs = binomial(n, j + 1 - k) * binomial(n - j - 1 + k, k);
  r.ok = r.lhs == r.rhs;
  return r;
}

}  // namespace cuberep
