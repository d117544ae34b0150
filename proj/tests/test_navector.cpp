#include <doctest.h>

#include "stonework/error.hpp"
#include "stonework/generators.hpp"
#include "stonework/navector.hpp"
#include "stonework/ultra.hpp"
#include "support/oracles.hpp"

using namespace stonework;

namespace {
  Rational q(std::int64_t p, std::int64_t d = 1) {
    return Rational(p, d);
  }

  // {0, 1} at 1/4, 2 at 1/2 from both, 3 at 2 from everything
  UltraPseudometric const sample({{q(0), q(1, 4), q(1, 2), q(2)},
                                  {q(1, 4), q(0), q(1, 2), q(2)},
                                  {q(1, 2), q(1, 2), q(0), q(2)},
                                  {q(2), q(2), q(2), q(0)}});

  Rational norm(KantorovichSpace const& s, std::uint64_t v) {
    return kantorovich_norm(s, FreeVector(v)).value;
  }
}  // namespace

TEST_CASE("space preparation") {
  KantorovichSpace s(sample);
  CHECK(s.point_count() == 4);
  CHECK(s.zero_point() == 4);
  CHECK(s.base()(0, 3) == q(1));
  CHECK(s.base()(0, 1) == q(1, 4));
  CHECK(s.extended()(2, 4) == q(1));
  CHECK(s.extended().carrier_size() == 5);
}

TEST_CASE("free vectors") {
  auto v = FreeVector::from_points({0, 2, 2, 3});
  CHECK(v.points() == std::vector<std::size_t>{0, 3});
  CHECK(v.support_size() == 2);
  CHECK((v + v).is_zero());
  CHECK((v + FreeVector::from_points({0})) == FreeVector::from_points({3}));
  CHECK_THROWS_AS(FreeVector::from_points({64}), InvalidArgument);
}

TEST_CASE("norm examples") {
  KantorovichSpace s(sample);
  CHECK(norm(s, 0) == q(0));
  for (std::size_t x = 0; x < 4; ++x) {
    CHECK(norm(s, std::uint64_t{1} << x) == q(1));
  }
  CHECK(norm(s, 0b0011) == q(1, 4));
  CHECK(norm(s, 0b0101) == q(1, 2));
  CHECK(norm(s, 0b1001) == q(1));
  CHECK(norm(s, 0b0111) == q(1));
  CHECK(norm(s, 0b1111) == q(1));

  auto r = kantorovich_norm(s, FreeVector(0b0011));
  REQUIRE(r.pairing.size() == 1);
  CHECK(r.pairing[0] == std::pair<std::size_t, std::size_t>{0, 1});
  auto odd = kantorovich_norm(s, FreeVector(0b0111));
  CHECK(odd.pairing.size() == 2);
}

TEST_CASE("pairing value is the largest pair distance") {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    KantorovichSpace s(random_ultrametric(4, rng, i % 2 == 0));
    for (std::uint64_t v = 0; v < 16; ++v) {
      auto     r = kantorovich_norm(s, FreeVector(v));
      Rational worst(0);
      std::uint64_t covered = 0;
      for (auto [x, y] : r.pairing) {
        worst = std::max(worst, s.extended()(x, y));
        for (auto p : {x, y}) {
          if (p != s.zero_point()) {
            covered ^= std::uint64_t{1} << p;
          }
        }
      }
      CHECK(worst == r.value);
      CHECK(covered == v);
    }
  }
}

TEST_CASE("norm agrees with the representation oracles") {
  Rng rng(37);
  for (int i = 0; i < 40; ++i) {
    std::size_t const n = 1 + static_cast<std::size_t>(i % 4);
    KantorovichSpace  s(random_ultrametric(n, rng, i % 3 == 0));
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      auto pts = FreeVector(v).points();
      CHECK(norm(s, v) == oracle::kantorovich(s.extended().matrix(), pts, false));
      CHECK(norm(s, v) == oracle::kantorovich(s.extended().matrix(), pts, true));
    }
  }
}

TEST_CASE("ultra-norm law") {
  KantorovichSpace s(sample);
  for (std::uint64_t u = 0; u < 16; ++u) {
    for (std::uint64_t v = 0; v < 16; ++v) {
      CHECK(norm(s, u ^ v) <= std::max(norm(s, u), norm(s, v)));
    }
  }
}

TEST_CASE("support limit") {
  KantorovichSpace s(UltraPseudometric::discrete(10));
  CHECK(norm(s, 0xFF) == q(1));
  CHECK_THROWS_AS(kantorovich_norm(s, FreeVector(0x1FF)), ResourceLimit);
  CHECK_THROWS_AS(kantorovich_norm(s, FreeVector(1U << 12)), InvalidArgument);
  CHECK_THROWS_AS(KantorovichSpace(UltraPseudometric::discrete(64)), InvalidArgument);
}

TEST_CASE("linear extension") {
  KantorovichSpace s(sample);
  auto v = FreeVector::from_points({0, 2});
  CHECK(lipschitz_linear_extend(s, {0, 1, 2, 3}, v) == v);
  CHECK(lipschitz_linear_extend(s, {2, 2, 2, 2}, FreeVector::from_points({0, 1})).is_zero());
  CHECK(lipschitz_linear_extend(s, {1, 0, 2, 3}, v) == FreeVector::from_points({1, 2}));
  try {
    lipschitz_linear_extend(s, {0, 2, 1, 3}, v);
    FAIL("expected NotLipschitz");
  } catch (NotLipschitz const& e) {
    CHECK(e.x == 0);
    CHECK(e.y == 1);
  }
  CHECK_THROWS_AS(lipschitz_linear_extend(s, {0, 1}, v), DimensionMismatch);
}

TEST_CASE("extension is functorial and norm-decreasing") {
  Rng rng(41);
  for (int i = 0; i < 10; ++i) {
    KantorovichSpace s(random_ultrametric(3, rng, i % 2 == 0));
    auto theta = enumerate_theta(s.base());
    for (auto const& f : theta.elements()) {
      for (std::uint64_t v = 0; v < 8; ++v) {
        auto fv = lipschitz_linear_extend(s, f, FreeVector(v));
        CHECK(norm(s, fv.support()) <= norm(s, v));
        for (auto const& g : theta.elements()) {
          CHECK(lipschitz_linear_extend(s, compose(f, g), FreeVector(v))
                == lipschitz_linear_extend(s, f, lipschitz_linear_extend(s, g, FreeVector(v))));
        }
      }
    }
  }
}
