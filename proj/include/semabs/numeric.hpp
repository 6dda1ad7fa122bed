#ifndef SEMABS_NUMERIC_HPP
#define SEMABS_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace semabs {

// Arbitrary-precision integers and rationals. Every assertion about
// centrality, lattices, and polytope membership is made with these types;
// doubles appear only in chart coordinates and lift outputs.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Exponents = std::vector<int>;  // point of N_0^S or Z^S, one entry per generator
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text; carries a 1-based source position.
struct ParseError : Error {
  int line;
  int col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

// A configured cap (rule count, completion steps, enumeration width) was hit.
struct ResourceLimitError : Error {
  using Error::Error;
};

// Caller violated a documented precondition (bad measure, wrong dimensions,
// endpoints not cutting the simplex, target outside the polytope, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// An iterative numeric routine failed to reach its tolerance.
struct NumericalError : Error {
  double residual;
  std::size_t iterations;
  NumericalError(const std::string& msg, double residual_, std::size_t iterations_)
      : Error(msg + " (residual " + std::to_string(residual_) + " after " +
              std::to_string(iterations_) + " iterations)"),
        residual(residual_),
        iterations(iterations_) {}
};

inline Int pow_int(const Int& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline Rat pow_rat(const Rat& base, unsigned exp) {
  if (exp == 0) return Rat(1);
  return Rat(pow_int(numerator(base), exp), pow_int(denominator(base), exp));
}

// Parses "p/q", "p", or "-p/q"; the denominator must be nonzero.
inline Rat parse_rational(const std::string& text) {
  auto bad = [&] { throw ParseError("invalid rational '" + text + "'", 1, 1); };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) bad();
  auto slash = s.find('/');
  auto is_int = [&](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(s)) bad();
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || Int(den) == 0) bad();
  return Rat(Int(num), Int(den));
}

// Canonical text form: "p/q", or "p" when the denominator is 1.
inline std::string format_rational(const Rat& value) {
  std::string s = numerator(value).str();
  if (denominator(value) != 1) s += "/" + denominator(value).str();
  return s;
}

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// (sum parts)! / prod(parts[i]!), the number of words with a given letter
// multiset.
inline Int multinomial(const Exponents& parts) {
  long long total = 0;
  for (int p : parts) total += p;
  Int r = factorial(static_cast<unsigned>(total));
  for (int p : parts) r /= factorial(static_cast<unsigned>(p));
  return r;
}

inline long long vec_sum(const Exponents& v) {
  long long s = 0;
  for (int x : v) s += x;
  return s;
}

}  // namespace semabs

#endif
