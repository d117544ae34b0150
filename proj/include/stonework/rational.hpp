#ifndef STONEWORK_RATIONAL_HPP_
#define STONEWORK_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// boost::rational<long> compared against a plain int literal recurses
// forever in the mixed-type templates shipped with some Boost releases.
// Exact non-template overloads win overload resolution and sidestep them.
namespace boost {
#define STONEWORK_RATIONAL_INT_CMP(op)                                                   \
  inline bool operator op(rational<std::int64_t> const& a, int b) {                      \
    return a op rational<std::int64_t>(b);                                               \
  }                                                                                      \
  inline bool operator op(int a, rational<std::int64_t> const& b) {                      \
    return rational<std::int64_t>(a) op b;                                               \
  }
  STONEWORK_RATIONAL_INT_CMP(==)
  STONEWORK_RATIONAL_INT_CMP(!=)
  STONEWORK_RATIONAL_INT_CMP(<)
  STONEWORK_RATIONAL_INT_CMP(>)
  STONEWORK_RATIONAL_INT_CMP(<=)
  STONEWORK_RATIONAL_INT_CMP(>=)
#undef STONEWORK_RATIONAL_INT_CMP
}  // namespace boost

namespace stonework {

  //! Exact distances. Every value produced by the library is either dyadic
  //! or of the form 1/n, so 64-bit numerators and denominators suffice.
  using Rational = boost::rational<std::int64_t>;

  //! "p/q" in lowest terms, or "p" when q == 1.
  std::string to_string(Rational const& r);

  //! Accepts "p", "p/q", and "-p/q". Throws InvalidArgument on anything else.
  Rational parse_rational(std::string_view s);

  //! 2^{-n}
  Rational dyadic(unsigned n);

}  // namespace stonework

#endif  // STONEWORK_RATIONAL_HPP_
