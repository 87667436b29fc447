#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace toral {

// All arithmetic in this library is exact: unbounded integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string int_to_string(const Int& v) { return v.get_str(); }

Int int_from_string(const std::string& s);

// "p/q" with q > 0 and gcd(p,q) = 1, or plain "p" when integral.
std::string rat_to_string(const Rat& v);
Rat rat_from_string(const std::string& s);

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Representative of v + Z in [0, 1).
Rat rat_mod1(const Rat& v);

inline bool is_integer(const Rat& v) { return v.get_den() == 1; }

std::vector<Rat> vec_mod1(const std::vector<Rat>& v);

}  // namespace toral
