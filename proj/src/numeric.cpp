#include "toral/numeric.hpp"

#include "toral/error.hpp"

namespace toral {

Int int_from_string(const std::string& s) {
  if (s.empty()) fail(ErrorKind::parse, "empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) fail(ErrorKind::parse, "bare sign is not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9')
      fail(ErrorKind::parse, "invalid integer literal: '" + s + "'");
  return Int(s, 10);
}

std::string rat_to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(s));
  Int num = int_from_string(s.substr(0, slash));
  Int den = int_from_string(s.substr(slash + 1));
  if (den == 0) fail(ErrorKind::parse, "zero denominator: '" + s + "'");
  return make_rat(num, den);
}

Rat rat_mod1(const Rat& v) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
  Rat out = v - Rat(fl);
  out.canonicalize();
  return out;
}

std::vector<Rat> vec_mod1(const std::vector<Rat>& v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const Rat& x : v) out.push_back(rat_mod1(x));
  return out;
}

}  // namespace toral
