#include "gpav/bigint.hpp"

#include <stdexcept>

namespace gpav {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int j) {
  if (n < 0) throw std::logic_error("binomial with negative upper argument");
  if (j < 0 || j > n) return 0;
  if (j > n - j) j = n - j;
  BigInt r = 1;
  for (int i = 1; i <= j; ++i) {
    r *= n - j + i;
    r /= i;  // exact at every step
  }
  return r;
}

BigInt binomial_or_zero(int n, int j) {
  if (j < 0 || n < j) return 0;
  return binomial(n, j);
}

}  // namespace gpav
