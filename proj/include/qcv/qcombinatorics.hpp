#pragma once

#include "qcv/qscalar.hpp"

namespace qcv {

// [n] = (q^n - q^-n)/(q - q^-1); odd in n.
QScalar q_int(int n);
// 1/[n], built directly in factored form. n != 0.
QScalar q_int_inverse(int n);
// [n]! = [1][2]...[n], n >= 0.
QScalar q_factorial(int n);
// [n]! / ([k]! [n-k]!), 0 for k outside [0, n]. Cached.
QScalar q_binomial(int n, int k);
// q - q^-1
QScalar q_minus_q_inverse();

} // namespace qcv
