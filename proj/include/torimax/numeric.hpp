#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace torimax {

// Exact arithmetic backbone. All lattice computation is integral; rationals
// appear only transiently in hull predicates, chart solves and Sturm chains.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>; // row-major

inline int sign_of(const Int& v) { return v.sign(); }

inline Int gcd_nonneg(const Int& a, const Int& b) {
  using boost::multiprecision::gcd;
  return gcd(a, b);
}

/// gcd of all entries, >= 0; 0 for an all-zero (or empty) vector.
inline Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_nonneg(g, x);
  return g;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

} // namespace torimax
