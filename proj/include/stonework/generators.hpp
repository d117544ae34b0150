#ifndef STONEWORK_GENERATORS_HPP_
#define STONEWORK_GENERATORS_HPP_

#include <cstddef>
#include <random>

#include "stonework/finmon.hpp"
#include "stonework/partition.hpp"
#include "stonework/ultra.hpp"
#include "stonework/unif.hpp"

// Seeded random instances for the randomized sweeps.  Everything is driven
// by a caller-owned engine so that a seed reproduces a sweep exactly.

namespace stonework {

  using Rng = std::mt19937_64;

  SelfMap random_selfmap(std::size_t n, Rng& rng);

  //! Uniform labels in [0, n), normalized.
  Partition random_partition(std::size_t n, Rng& rng);

  //! A chain of the given length on n points, built from a random finest
  //! level by successively merging random classes.
  MonotoneChain random_chain(std::size_t n, std::size_t length, Rng& rng);

  //! Single-linkage heights of random merges; with allow_zero some
  //! distinct points end up at distance 0.
  UltraPseudometric random_ultrametric(std::size_t n, Rng& rng, bool allow_zero = false);

  //! A monoid with at most max_size elements: the transformation monoid
  //! generated by one or two random self-maps of a 2- or 3-point set,
  //! sometimes replaced by its opposite.
  FiniteMonoid random_small_monoid(std::size_t max_size, Rng& rng);

  //! An ultra-pseudometric nonexpansive on the given side, from a chain
  //! of random left (or right) congruences.
  UltraPseudometric random_nonexpansive_metric(FiniteMonoid const& m, Side side, Rng& rng);

  //! A cover of n points with 1..n+1 blocks.
  Cover random_cover(std::size_t n, Rng& rng);

}  // namespace stonework

#endif  // STONEWORK_GENERATORS_HPP_
