#ifndef STONEWORK_ULTRA_HPP_
#define STONEWORK_ULTRA_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "stonework/finmon.hpp"
#include "stonework/limits.hpp"
#include "stonework/partition.hpp"
#include "stonework/rational.hpp"

namespace stonework {

  using DistanceMatrix = std::vector<std::vector<Rational>>;

  //! A symmetric, nonnegative, zero-diagonal matrix satisfying
  //! d(x, z) <= max(d(x, y), d(y, z)).  All arithmetic is exact.
  class UltraPseudometric {
   public:
    //! Throws InvalidMetric naming the first violated axiom.
    explicit UltraPseudometric(DistanceMatrix dist);

    //! d(x, y) = 1 for x != y.
    static UltraPseudometric discrete(std::size_t n);

    std::size_t carrier_size() const noexcept {
      return _d.size();
    }

    Rational const& operator()(std::size_t x, std::size_t y) const {
      return _d[x][y];
    }

    DistanceMatrix const& matrix() const noexcept {
      return _d;
    }

    Rational diameter() const;

    //! The distinct entries, ascending (0 included).
    std::vector<Rational> distinct_values() const;

    //! Open ball {y : d(x, y) < r}.
    std::vector<std::size_t> ball(std::size_t x, Rational const& r) const;

    //! The relation {d < r}; an equivalence because d is ultra.
    Partition ball_partition(Rational const& r) const;

    //! min(d, cap)
    UltraPseudometric truncated(Rational const& cap) const;

    bool operator==(UltraPseudometric const&) const = default;

   private:
    DistanceMatrix _d;
  };

  //! Exhaustive strong-triangle check over all triples.
  bool satisfies_strong_triangle(DistanceMatrix const& d);

  //! A finite chain s_1 ⊇ s_2 ⊇ ... of equivalence relations; s_0 is the
  //! indiscrete relation and is implicit.
  class MonotoneChain {
   public:
    //! Throws ChainNotMonotone(i) if level i (1-based) does not refine
    //! level i - 1, and CarrierMismatch on size mismatches.
    MonotoneChain(std::size_t carrier_size, std::vector<Partition> levels);

    std::size_t carrier_size() const noexcept {
      return _n;
    }

    std::size_t length() const noexcept {
      return _levels.size();
    }

    //! Level n for n in [0, length()]; level 0 is indiscrete.
    Partition level(std::size_t n) const;

    std::vector<Partition> const& levels() const noexcept {
      return _levels;
    }

   private:
    std::size_t            _n;
    std::vector<Partition> _levels;
  };

  //! How a finite chain s_1, ..., s_m continues beyond its last level.
  enum class ChainTail {
    //! s_{m+1} is equality, so distinct points are at positive distance.
    discrete,
    //! s_m = s_{m+1} = ..., so points related by s_m are at distance 0.
    stabilized
  };

  //! The metric of a monotone chain: d(x, y) = 2^{-n} where n is the
  //! largest level relating x and y, and 0 for pairs related at every
  //! level.  For every n < length() the sandwich
  //! s_{n+1} ⊆ {d < 2^{-n}} ⊆ s_n holds.
  UltraPseudometric d_from_chain(MonotoneChain const& chain,
                                 ChainTail            tail = ChainTail::discrete);

  //! Minimax-path closure of a symmetric weight matrix: the largest
  //! ultra-pseudometric below the weights (single-linkage heights).
  UltraPseudometric subdominant_ultrametric(DistanceMatrix const& weights);

  //! Pointwise max of min(d_i, cap).  Throws CarrierMismatch.
  UltraPseudometric sup_combine(std::vector<UltraPseudometric> const& metrics,
                                Rational const&                       cap);

  enum class Side { left, right };

  struct NonexpansiveResult {
    bool holds = true;
    //! First failing (x, y, s) in lexicographic order.
    std::optional<std::array<std::size_t, 3>> witness;
  };

  //! right: d(xs, ys) <= d(x, y); left: d(sx, sy) <= d(x, y); for all
  //! x, y, s.
  NonexpansiveResult check_nonexpansive(FiniteMonoid const&      m,
                                        UltraPseudometric const& d,
                                        Side                     side);

  //! Open ball of radius r around the identity.
  std::vector<std::size_t> identity_ball(FiniteMonoid const&      m,
                                         UltraPseudometric const& d,
                                         Rational const&          r);

  //! Checks that B(e, r) is a submonoid.  d must be nonexpansive on the
  //! given side (right by default); this is verified first and
  //! PreconditionUnverified is thrown otherwise.
  bool ball_submonoid_check(FiniteMonoid const&      m,
                            UltraPseudometric const& d,
                            Rational const&          r,
                            Side                     side = Side::right);

  //! x ~ y implies sx ~ sy for every s.
  bool check_left_congruence(FiniteMonoid const& m, Partition const& p);

  //! x ~ y implies xs ~ ys for every s.
  bool check_right_congruence(FiniteMonoid const& m, Partition const& p);

  //! Smallest left (or right) congruence containing p.
  Partition congruence_closure(FiniteMonoid const& m,
                               Partition const&    p,
                               Side                side);

  bool is_lipschitz(SelfMap const& f, UltraPseudometric const& d);

  //! All 1-Lipschitz self-maps of (M, d), lexicographically ordered.  With
  //! injective_only, only the injective ones.
  SelfMapMonoid enumerate_theta(UltraPseudometric const& d,
                                bool                     injective_only = false,
                                Limits const&            limits = default_limits());

  //! {(f1, f2) : d(f1(a), f2(a)) < eps for all a in A} as a partition of
  //! the elements of theta.
  Partition epsilon_A_relation(SelfMapMonoid const&     theta,
                               UltraPseudometric const& d,
                               std::vector<Point> const& A,
                               Rational const&          eps);

}  // namespace stonework

#endif  // STONEWORK_ULTRA_HPP_
