#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace absolim {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator) after every arithmetic op, which is exactly the invariant the
// serialization format demands.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& q) {
  // "p" when the denominator is 1, else "p/q".
  return q.get_str();
}

// Strict read: accepts exactly the strings rat_to_string produces.
// "2/4", "+1", "1/-2", "-0", "01", "1/0" are all rejected.
inline Rat rat_from_string(const std::string& s) {
  Rat q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a canonical rational: '" + s + "'");
  Rat canon = q;
  canon.canonicalize();
  if (canon.get_str() != s)
    throw std::invalid_argument("not a canonical rational: '" + s + "'");
  return canon;
}

}  // namespace absolim
