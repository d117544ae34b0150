#include "stonework/rational.hpp"

#include <charconv>

#include "stonework/error.hpp"

namespace stonework {

  std::string to_string(Rational const& r) {
    if (r.denominator() == 1) {
      return std::to_string(r.numerator());
    }
    return std::to_string(r.numerator()) + "/"
           + std::to_string(r.denominator());
  }

  namespace {
    std::int64_t parse_int(std::string_view s, std::string_view whole) {
      std::int64_t v   = 0;
      auto const*  end = s.data() + s.size();
      auto [ptr, ec]   = std::from_chars(s.data(), end, v);
      if (s.empty() || ec != std::errc() || ptr != end) {
        throw InvalidArgument("malformed rational '" + std::string(whole)
                              + "'");
      }
      return v;
    }
  }  // namespace

  Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_int(s, s));
    }
    std::int64_t num = parse_int(s.substr(0, slash), s);
    std::int64_t den = parse_int(s.substr(slash + 1), s);
    if (den == 0) {
      throw InvalidArgument("zero denominator in '" + std::string(s) + "'");
    }
    return Rational(num, den);
  }

  Rational dyadic(unsigned n) {
    if (n > 62) {
      throw InvalidArgument("dyadic exponent too large");
    }
    return Rational(1, std::int64_t{1} << n);
  }

}  // namespace stonework
