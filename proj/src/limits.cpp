#include "stonework/limits.hpp"

#include <cstdlib>
#include <string>

#include "stonework/error.hpp"

namespace stonework {

  Limits Limits::from_env() {
    Limits      l;
    char const* env = std::getenv("STONEWORK_MAX_ENUM");
    if (env != nullptr && *env != '\0') {
      char*              end = nullptr;
      unsigned long long v   = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || v == 0 || *env == '-') {
        throw ConfigError("STONEWORK_MAX_ENUM must be a positive integer, got '"
                          + std::string(env) + "'");
      }
      l.max_enum = static_cast<std::size_t>(v);
    }
    return l;
  }

  void check_enum_bound(std::string const& what,
                        long double        count,
                        std::size_t        bound) {
    if (count > static_cast<long double>(bound)) {
      throw ResourceLimit(what, count, bound);
    }
  }

  long double power_ld(std::size_t base, std::size_t exp) {
    long double r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
      r *= static_cast<long double>(base);
    }
    return r;
  }

}  // namespace stonework
