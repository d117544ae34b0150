#include "stonework/error.hpp"

#include <sstream>

namespace stonework {

  namespace {
    std::string triple(std::size_t x, std::size_t y, std::size_t z) {
      std::ostringstream os;
      os << "associativity fails at (" << x << ", " << y << ", " << z << ")";
      return os.str();
    }
  }  // namespace

  AssociativityViolation::AssociativityViolation(std::size_t x,
                                                 std::size_t y,
                                                 std::size_t z)
      : Error(triple(x, y, z)), witness{x, y, z} {}

  IdentityViolation::IdentityViolation(std::size_t x)
      : Error("identity law fails at element " + std::to_string(x)),
        element(x) {}

  ResourceLimit::ResourceLimit(std::string const& what_,
                               long double requested_,
                               std::size_t bound_)
      : Error(what_ + ": requested " + std::to_string(requested_)
              + " exceeds bound " + std::to_string(bound_)),
        requested(requested_),
        bound(bound_) {}

  ChainNotMonotone::ChainNotMonotone(std::size_t level_)
      : Error("chain level " + std::to_string(level_)
              + " does not refine its predecessor"),
        level(level_) {}

  NotLipschitz::NotLipschitz(std::size_t x_, std::size_t y_)
      : Error("map increases the distance between points "
              + std::to_string(x_) + " and " + std::to_string(y_)),
        x(x_),
        y(y_) {}

  ParseError::ParseError(std::string const& msg,
                         std::size_t line_,
                         std::size_t column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column "
              + std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}

}  // namespace stonework
