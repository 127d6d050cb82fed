#include "geodex/homology.hpp"

#include <stdexcept>

namespace geodex {

namespace {

void check_n(int n) {
  if (n < 3) throw std::invalid_argument("sphere dimension must be at least 3");
}

// Odd n = 2k+1: nonzero degrees are q = 2k + 2l (l >= 0), with b = 2 when
// l > 0 and k | l. Even n = 2k: q = 2k-1 + 2l, with b = 2 when l > 0 and (2k-1) | l.
struct Family {
  long base;    // first nonzero degree
  long period;  // l-period of the doubled entries
};

Family family(int n) {
  const long k = n / 2;
  if (n % 2 == 1) return {2 * k, k};
  return {2 * k - 1, 2 * k - 1};
}

}  // namespace

int betti(int n, const Int& q) {
  check_n(n);
  const Family f = family(n);
  if (q < f.base) return 0;
  Int off = q - f.base;
  if (mpz_odd_p(off.get_mpz_t())) return 0;
  Int l = off / 2;
  if (l > 0 && mpz_divisible_ui_p(l.get_mpz_t(), static_cast<unsigned long>(f.period))) return 2;
  return 1;
}

Int alternating_sum(int n, const Int& q_max) {
  check_n(n);
  const Family f = family(n);
  if (q_max < f.base) return 0;
  Int L = (q_max - f.base) / 2;  // l runs over 0..L
  Int total = (L + 1) + L / f.period;
  // All nonzero degrees share the parity of n-1.
  return n % 2 == 1 ? total : Int(-total);
}

Rat constant_B(int n) {
  check_n(n);
  if (n % 2 == 1) return make_rat(n + 1, 2 * (n - 1));
  return make_rat(-n, 2 * n - 2);
}

std::map<long, int> betti_table(int n, long q_max) {
  std::map<long, int> t;
  for (long q = 0; q <= q_max; ++q) t[q] = betti(n, q);
  return t;
}

}  // namespace geodex
