#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cuberep {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(int n, int k);

/// Subsets of [n] with fewer than n/4 or more than 3n/4 elements, against
/// the bound 1.9^n * n. `ok` is decided exactly: count * 10^n <= 19^n * n.
struct MiddleMassReport {
  int n = 0;
  BigInt count;
  double bound = 0.0;
  bool ok = false;
};

MiddleMassReport middle_mass_bound(int n);

/// Both sides of C(n, j+1) C(j+1, k) = C(n, j+1-k) C(n-j-1+k, k).
struct IdentityReport {
  BigInt lhs;
  BigInt rhs;
  bool ok = false;
};

/// Requires 0 <= k <= j+1 <= n; throws InvalidArgument otherwise.
IdentityReport count_identity_check(int n, int j, int k);

}  // namespace cuberep
