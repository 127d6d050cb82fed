#pragma once

#include <map>

#include "geodex/exact.hpp"

namespace geodex {

/// Rational Betti number b_q of the free loop space pair of S^n, in {0, 1, 2}.
int betti(int n, const Int& q);

/// b_0 - b_1 + b_2 - ... +/- b_{q_max}; closed form, O(1).
Int alternating_sum(int n, const Int& q_max);

/// B(n, 1): (n+1)/(2(n-1)) for odd n, -n/(2n-2) for even n.
Rat constant_B(int n);

std::map<long, int> betti_table(int n, long q_max);

}  // namespace geodex
