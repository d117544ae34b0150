#include "stonework/contrast.hpp"

#include <bit>
#include <cstdio>

#include "stonework/error.hpp"

namespace stonework {

  namespace {
    FiniteMonoid build_table(std::size_t k) {
      std::size_t const   tuples = std::size_t{1} << k;
      std::size_t const   n      = tuples + k;
      FiniteMonoid::Table t(n, std::vector<std::size_t>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a >= tuples) {
            t[a][b] = a;
          } else if (b < tuples) {
            t[a][b] = a & b;
          } else {
            std::size_t const m = b - tuples;
            t[a][b]             = tuples + (((a >> m) & 1U) != 0 ? m : 0);
          }
        }
      }
      return validate_monoid(t, tuples - 1);
    }

    UltraPseudometric build_metric(std::size_t k) {
      std::size_t const tuples = std::size_t{1} << k;
      std::size_t const n      = tuples + k;
      DistanceMatrix    d(n, std::vector<Rational>(n, Rational(1)));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (x == y) {
            d[x][y] = 0;
          } else if (x < tuples && y < tuples) {
            d[x][y] = contrast_rho(x, y);
          }
        }
      }
      return UltraPseudometric(std::move(d));
    }

    std::size_t checked_k(std::size_t k, Limits const& limits) {
      if (k == 0) {
        throw InvalidArgument("truncation level k must be at least 1");
      }
      if (k > 20) {
        throw ResourceLimit("contrast monoid truncation", static_cast<long double>(k), 20);
      }
      long double const n = static_cast<long double>((std::size_t{1} << k) + k);
      check_enum_bound("contrast monoid associativity triples", n * n * n,
                       limits.max_enum);
      return k;
    }
  }  // namespace

  Rational contrast_rho(std::uint64_t s, std::uint64_t t) {
    if (s == t) {
      return Rational(0);
    }
    return Rational(1, std::countr_zero(s ^ t) + 1);
  }

  ContrastMonoid::ContrastMonoid(std::size_t k, Limits const& limits)
      : _k(checked_k(k, limits)), _monoid(build_table(k)), _metric(build_metric(k)) {}

  std::string ContrastMonoid::label(std::size_t i) const {
    if (!is_tuple(i)) {
      return "n" + std::to_string(number_of(i));
    }
    std::string s = "(";
    for (std::size_t c = 1; c <= _k; ++c) {
      s += coordinate(i, c) ? '1' : '0';
      s += c == _k ? ')' : ',';
    }
    return s;
  }

  RnaCertificate rna_certificate(ContrastMonoid const& s) {
    FiniteMonoid const&      m = s.monoid();
    UltraPseudometric const& d = s.metric();
    std::size_t const        n = m.size();

    RnaCertificate cert;
    cert.k               = s.k();
    cert.carrier_size    = n;
    cert.triples_checked = n * n * n;
    cert.left            = check_nonexpansive(m, d, Side::left);
    cert.right           = check_nonexpansive(m, d, Side::right);

    std::vector<SelfMap> lambda(n);
    cert.translations_lipschitz = true;
    for (std::size_t x = 0; x < n; ++x) {
      lambda[x] = left_translation(m, x);
      cert.translations_lipschitz = cert.translations_lipschitz && is_lipschitz(lambda[x], d);
    }
    // lambda_s(e) = s recovers s, so distinct elements give distinct maps.
    cert.embedding_injective = true;
    for (std::size_t x = 0; x < n; ++x) {
      cert.embedding_injective = cert.embedding_injective && lambda[x][m.identity()] == x;
    }
    cert.embedding_homomorphism = true;
    for (std::size_t x = 0; x < n && cert.embedding_homomorphism; ++x) {
      for (std::size_t y = 0; y < n && cert.embedding_homomorphism; ++y) {
        cert.embedding_homomorphism = lambda[m.product(x, y)] == compose(lambda[x], lambda[y]);
      }
    }
    cert.identity_balls_submonoids = cert.left.holds;
    if (cert.left.holds) {
      auto radii = d.distinct_values();
      radii.push_back(d.diameter() + 1);
      for (auto const& r : radii) {
        if (r > 0 && !ball_submonoid_check(m, d, r, Side::left)) {
          cert.identity_balls_submonoids = false;
        }
      }
    }
    return cert;
  }

  ObstructionWitness obstruction_witness(ContrastMonoid const& s, std::size_t j) {
    std::size_t const k    = s.k();
    std::size_t const one  = s.monoid().identity();
    std::size_t const zero = s.number_index(0);
    // Prefer the largest number: it is nonzero whenever k >= 2.
    for (std::size_t m = k; m-- > 0;) {
      std::size_t const coord = m + 1;
      if (coord <= j) {
        continue;
      }
      std::size_t const u = one & ~(std::size_t{1} << m);
      if (!s.coordinate(u, coord) && s.monoid().product(u, s.number_index(m)) == zero) {
        return {j, u, m};
      }
    }
    throw NoWitness("no tuple agreeing with the identity on coordinates 1.."
                    + std::to_string(j) + " has a free coordinate when k = "
                    + std::to_string(k));
  }

  std::string table_digest(FiniteMonoid const& m) {
    std::uint64_t h = 14695981039346656037ULL;
    auto          mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xFFU;
        h *= 1099511628211ULL;
      }
    };
    mix(m.size());
    mix(m.identity());
    for (std::size_t x = 0; x < m.size(); ++x) {
      for (std::size_t y = 0; y < m.size(); ++y) {
        mix(m.product(x, y));
      }
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

}  // namespace stonework
