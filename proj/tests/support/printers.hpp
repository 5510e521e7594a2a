#pragma once

// Readable gtest output for library types.

#include "qcv/ring_matrix.hpp"

#include <ostream>

namespace qcv {

inline void PrintTo(const QScalar &s, std::ostream *os) { *os << s.to_string(); }
inline void PrintTo(const TorusElement &t, std::ostream *os) { *os << t.to_string(); }
template <class R>
void PrintTo(const RingMatrix<R> &m, std::ostream *os) {
    *os << "\n" << m.pretty();
}

} // namespace qcv
