#ifndef STONEWORK_LIMITS_HPP_
#define STONEWORK_LIMITS_HPP_

#include <cstddef>
#include <string>

namespace stonework {

  //! Enumeration bounds shared by every exhaustive operation.
  //!
  //! The default bound on the number of enumerated objects is 10^7; the
  //! environment variable STONEWORK_MAX_ENUM overrides it.
  struct Limits {
    std::size_t max_enum           = 10'000'000;
    std::size_t max_vector_support = 8;

    static Limits from_env();
  };

  inline Limits default_limits() {
    return Limits::from_env();
  }

  // Throws ResourceLimit when count > bound.  The count is passed as long
  // double so that n^n can be checked before it overflows.
  void check_enum_bound(std::string const& what,
                        long double        count,
                        std::size_t        bound);

  // base^exp as long double, for bound checks.
  long double power_ld(std::size_t base, std::size_t exp);

}  // namespace stonework

#endif  // STONEWORK_LIMITS_HPP_
