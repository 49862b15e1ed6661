#ifndef DERIVLAB_RATIONAL_HPP
#define DERIVLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace derivlab {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the canonical form we need.
using Rational = boost::multiprecision::cpp_rational;

inline Integer rat_num(const Rational& q) { return numerator(q); }
inline Integer rat_den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace derivlab

#endif
