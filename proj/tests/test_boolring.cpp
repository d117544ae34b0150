#include <doctest.h>

#include <algorithm>
#include <set>

#include "stonework/boolring.hpp"
#include "stonework/error.hpp"
#include "stonework/finmon.hpp"
#include "support/oracles.hpp"

using namespace stonework;

TEST_CASE("ring laws") {
  for (std::size_t n = 1; n <= 4; ++n) {
    BoolRing r(n);
    CHECK(r.size() == (1U << n));
    for (BoolRing::Element x = 0; x < r.size(); ++x) {
      CHECK(BoolRing::mul(x, x) == x);
      CHECK(BoolRing::add(x, x) == r.zero());
      CHECK(BoolRing::mul(x, r.one()) == x);
    }
  }
  CHECK_THROWS_AS(BoolRing(0), InvalidArgument);
  CHECK_THROWS_AS(BoolRing(32), InvalidArgument);
}

TEST_CASE("bitstrings put atom 0 first") {
  CHECK(to_bitstring(0b001, 3) == "100");
  CHECK(parse_bitstring("011", 3) == 0b110);
  CHECK_THROWS_AS(parse_bitstring("01", 3), InvalidArgument);
  CHECK_THROWS_AS(parse_bitstring("0a1", 3), InvalidArgument);
}

TEST_CASE("enumerate_ring_endos matches the brute force filter") {
  std::size_t const expected[] = {1, 4, 27, 256};
  for (std::size_t n = 1; n <= 4; ++n) {
    BoolRing ring(n);
    auto     endos = enumerate_ring_endos(ring);
    CHECK(endos.size() == expected[n - 1]);
    CHECK(std::is_sorted(endos.begin(), endos.end()));
    if (n <= 3) {
      auto brute = oracle::ring_endos(n);
      std::vector<std::vector<std::uint32_t>> ours;
      for (auto const& e : endos) {
        ours.push_back(e.atom_images());
      }
      std::sort(ours.begin(), ours.end());
      std::sort(brute.begin(), brute.end());
      CHECK(ours == brute);
    }
  }
  CHECK(enumerate_ring_endos(BoolRing(1)).front() == RingEndo::identity(BoolRing(1)));
}

TEST_CASE("ring endos compose like the opposite of T_n") {
  BoolRing ring(3);
  auto     endos = enumerate_ring_endos(ring);
  for (auto const& f : endos) {
    for (auto const& g : endos) {
      CHECK(std::binary_search(endos.begin(), endos.end(), compose(f, g)));
    }
  }
}

TEST_CASE("RingEndo validation") {
  BoolRing ring(2);
  CHECK_NOTHROW(RingEndo(ring, {0b01, 0b10}));
  CHECK_NOTHROW(RingEndo(ring, {0b11, 0b00}));
  CHECK_THROWS_AS(RingEndo(ring, {0b01, 0b01}), InvalidArgument);  // not unital
  CHECK_THROWS_AS(RingEndo(ring, {0b11, 0b01}), InvalidArgument);  // overlapping
  CHECK_THROWS_AS(RingEndo(ring, {0b01}), DimensionMismatch);
}

TEST_CASE("enumerate_group_endos") {
  CHECK(enumerate_group_endos(BoolRing(1)).size() == 2);
  CHECK(enumerate_group_endos(BoolRing(2)).size() == 16);
  auto all = enumerate_group_endos(BoolRing(3));
  CHECK(all.size() == 512);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  for (auto const& s : all) {
    for (BoolRing::Element x = 0; x < 8; ++x) {
      for (BoolRing::Element y = 0; y < 8; ++y) {
        CHECK(s.apply(x ^ y) == (s.apply(x) ^ s.apply(y)));
      }
    }
  }
}

TEST_CASE("GroupEndo algebra") {
  BoolRing  ring(2);
  GroupEndo swap(ring, {0b10, 0b01});
  CHECK(swap.transpose() == swap);
  CHECK(compose(swap, swap) == GroupEndo::identity(ring));
  GroupEndo upper(ring, {0b11, 0b10});
  CHECK(upper.transpose().rows() == std::vector<std::uint32_t>{0b01, 0b11});
  CHECK(upper.apply(0b01) == 0b01);
  CHECK(upper.apply(0b10) == 0b11);
  CHECK(upper.column(1) == 0b11);
}

TEST_CASE("pontryagin dual") {
  CHECK(pontryagin_dual(BoolRing(1)).functionals().size() == 2);
  auto dual = pontryagin_dual(BoolRing(2));
  CHECK(dual.functionals().size() == 4);
  // pairing matrix over the 2-element field is nondegenerate
  for (std::size_t n = 1; n <= 4; ++n) {
    BoolRing ring(n);
    std::vector<std::uint32_t> rows;
    for (BoolRing::Element x = 0; x < ring.size(); ++x) {
      std::uint32_t row = 0;
      for (std::size_t a = 0; a < n; ++a) {
        row |= static_cast<std::uint32_t>(DualGroup::pairing(x, ring.atom(a))) << a;
      }
      rows.push_back(row);
    }
    CHECK(oracle::gf2_rank(rows) == n);
  }
}

TEST_CASE("double dual is bijective") {
  for (std::size_t n = 1; n <= 4; ++n) {
    DualGroup dual{BoolRing(n)};
    std::set<std::vector<bool>> seen;
    for (BoolRing::Element x = 0; x < (1U << n); ++x) {
      seen.insert(dual.double_dual(x));
    }
    CHECK(seen.size() == (1U << n));
  }
}

TEST_CASE("ring homs to Z2") {
  CHECK(ring_homs_to_Z2(BoolRing(1)).size() == 1);
  BoolRing ring(3);
  auto     homs = ring_homs_to_Z2(ring);
  CHECK(homs.size() == 3);
  // brute force over all 8 functionals
  std::vector<DualGroup::Functional> brute;
  for (DualGroup::Functional f = 0; f < 8; ++f) {
    bool ok = DualGroup::pairing(ring.one(), f);
    for (BoolRing::Element x = 0; x < 8; ++x) {
      for (BoolRing::Element y = 0; y < 8; ++y) {
        ok = ok && DualGroup::pairing(x & y, f) == (DualGroup::pairing(x, f) && DualGroup::pairing(y, f));
      }
    }
    if (ok) {
      brute.push_back(f);
    }
  }
  CHECK(homs == brute);
  CHECK(std::find(homs.begin(), homs.end(), 0U) == homs.end());
  for (auto f : homs) {
    int hits = 0;
    for (std::size_t a = 0; a < 3; ++a) {
      hits += DualGroup::pairing(ring.atom(a), f) ? 1 : 0;
    }
    CHECK(hits == 1);
  }
}
