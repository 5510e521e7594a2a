#pragma once

#include "qcv/laurent_poly.hpp"

namespace qcv {

int euler_phi(int d);

// Phi_d(v), the d-th cyclotomic polynomial. Cached; safe to call from
// several threads.
const LaurentPoly &cyclotomic(int d);

// p / Phi_d if Phi_d divides p, else nullopt. A floating-point evaluation at
// a primitive d-th root of unity rules out most non-divisors before the exact
// division is attempted.
std::optional<LaurentPoly> divide_by_cyclotomic(const LaurentPoly &p, int d);

} // namespace qcv
