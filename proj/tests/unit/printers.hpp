#pragma once

#include <ostream>

#include "rrloc/rootsys.hpp"
#include "rrloc/truncseries.hpp"

namespace rrloc {

inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const TruncatedSeries& s, std::ostream* os) { *os << s.to_string() << " + O(" << s.trunc_degree() + 1 << ")"; }
inline void PrintTo(const Weight& w, std::ostream* os) { *os << "(" << w.to_string() << ")"; }
inline void PrintTo(const Matrix& m, std::ostream* os) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    *os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) *os << (c ? " " : "") << to_string(m(r, c));
    *os << "]";
  }
}

}  // namespace rrloc
