#include "stonework/navector.hpp"

#include <bit>
#include <string>

#include "stonework/error.hpp"

namespace stonework {

  namespace {
    DistanceMatrix with_zero_point(UltraPseudometric const& base) {
      std::size_t const n = base.carrier_size();
      DistanceMatrix    d(n + 1, std::vector<Rational>(n + 1, Rational(1)));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          d[x][y] = base(x, y);
        }
      }
      d[n][n] = 0;
      return d;
    }

    UltraPseudometric checked_truncation(UltraPseudometric const& d) {
      if (d.carrier_size() > KantorovichSpace::max_points) {
        throw InvalidArgument("at most 63 base points are supported");
      }
      return d.truncated(Rational(1));
    }

    struct PairingSearch {
      UltraPseudometric const&                         d;
      std::size_t                                      zero;
      Rational                                         best;
      std::vector<std::pair<std::size_t, std::size_t>> best_pairs;
      std::vector<std::pair<std::size_t, std::size_t>> pairs;

      void run(std::uint64_t remaining, Rational const& cost) {
        if (cost >= best) {
          return;
        }
        if (remaining == 0) {
          best       = cost;
          best_pairs = pairs;
          return;
        }
        auto const    x    = static_cast<std::size_t>(std::countr_zero(remaining));
        std::uint64_t rest = remaining & (remaining - 1);
        for (std::uint64_t it = rest; it != 0; it &= it - 1) {
          auto const y = static_cast<std::size_t>(std::countr_zero(it));
          pairs.emplace_back(x, y);
          run(rest & ~(std::uint64_t{1} << y), std::max(cost, d(x, y)));
          pairs.pop_back();
        }
        pairs.emplace_back(x, zero);
        run(rest, std::max(cost, d(x, zero)));
        pairs.pop_back();
      }
    };
  }  // namespace

  KantorovichSpace::KantorovichSpace(UltraPseudometric const& d)
      : _base(checked_truncation(d)), _extended(with_zero_point(_base)) {}

  FreeVector FreeVector::from_points(std::vector<std::size_t> const& points) {
    std::uint64_t s = 0;
    for (std::size_t x : points) {
      if (x >= 64) {
        throw InvalidArgument("vector point out of range");
      }
      s ^= std::uint64_t{1} << x;
    }
    return FreeVector(s);
  }

  std::vector<std::size_t> FreeVector::points() const {
    std::vector<std::size_t> out;
    for (std::uint64_t it = _support; it != 0; it &= it - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(it)));
    }
    return out;
  }

  std::size_t FreeVector::support_size() const noexcept {
    return static_cast<std::size_t>(std::popcount(_support));
  }

  KantorovichNorm kantorovich_norm(KantorovichSpace const& space,
                                   FreeVector              v,
                                   Limits const&           limits) {
    if (space.point_count() < 64 && (v.support() >> space.point_count()) != 0) {
      throw InvalidArgument("vector support leaves the base space");
    }
    check_enum_bound("vector support size",
                     static_cast<long double>(v.support_size()),
                     limits.max_vector_support);
    if (v.is_zero()) {
      return {Rational(0), {}};
    }
    // Pairing everything with the zero point costs exactly 1, an upper
    // bound on every pairing since d <= 1.
    PairingSearch search{space.extended(), space.zero_point(), Rational(2), {}, {}};
    search.run(v.support(), Rational(0));
    return {search.best, search.best_pairs};
  }

  FreeVector lipschitz_linear_extend(KantorovichSpace const& space,
                                     SelfMap const&          f,
                                     FreeVector              v) {
    auto const& d = space.base();
    if (f.size() != d.carrier_size()) {
      throw DimensionMismatch("map and space on different carriers");
    }
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (f[x] >= f.size()) {
        throw InvalidArgument("map value out of range");
      }
      for (std::size_t y = x + 1; y < f.size(); ++y) {
        if (d(f[x], f[y]) > d(x, y)) {
          throw NotLipschitz(x, y);
        }
      }
    }
    std::uint64_t image = 0;
    for (std::size_t x : v.points()) {
      if (x >= f.size()) {
        throw InvalidArgument("vector support leaves the base space");
      }
      image ^= std::uint64_t{1} << f[x];
    }
    return FreeVector(image);
  }

}  // namespace stonework
