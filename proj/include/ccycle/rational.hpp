#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccycle {

using Rat = boost::rational<long long>;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

// Parses "p", "-p" or "p/q".
inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(s));
  long long p = std::stoll(s.substr(0, slash));
  long long q = std::stoll(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(p, q);
}

inline std::string format_rational(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace ccycle
