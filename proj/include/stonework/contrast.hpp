#ifndef STONEWORK_CONTRAST_HPP_
#define STONEWORK_CONTRAST_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stonework/finmon.hpp"
#include "stonework/limits.hpp"
#include "stonework/rational.hpp"
#include "stonework/ultra.hpp"

namespace stonework {

  //! The monoid C ⊔_π N_0 truncated at level k, with its ultra-metric.
  //!
  //! C = {0,1}^k under pointwise multiplication, and N_0 is cut down to
  //! {0, ..., k - 1}.  Tuple coordinates are numbered 1..k when computing
  //! distances (rho(s, t) = 1 / first differing coordinate) and the number
  //! m reads coordinate m + 1, so that for a tuple a and a number m
  //! a o m = a_{m+1} * m.  Numbers absorb on the right: m o b = m.
  //!
  //! Carrier layout: indices 0 .. 2^k - 1 are tuples, with bit i of the
  //! index holding coordinate i + 1; index 2^k + m is the number m.  The
  //! identity is the all-ones tuple.
  class ContrastMonoid {
   public:
    //! Throws ResourceLimit if (2^k + k)^3 exceeds the enumeration bound
    //! and InvalidArgument if k == 0.
    explicit ContrastMonoid(std::size_t k, Limits const& limits = default_limits());

    std::size_t k() const noexcept {
      return _k;
    }

    std::size_t tuple_count() const noexcept {
      return std::size_t{1} << _k;
    }

    std::size_t carrier_size() const noexcept {
      return tuple_count() + _k;
    }

    bool is_tuple(std::size_t i) const noexcept {
      return i < tuple_count();
    }

    std::size_t number_index(std::size_t m) const noexcept {
      return tuple_count() + m;
    }

    std::size_t number_of(std::size_t i) const noexcept {
      return i - tuple_count();
    }

    //! Value of coordinate c (1-based) of the tuple with index i.
    bool coordinate(std::size_t i, std::size_t c) const noexcept {
      return ((i >> (c - 1)) & 1U) != 0;
    }

    FiniteMonoid const& monoid() const noexcept {
      return _monoid;
    }

    UltraPseudometric const& metric() const noexcept {
      return _metric;
    }

    //! "(1,0,1)" for tuples, "n2" for numbers.
    std::string label(std::size_t i) const;

   private:
    std::size_t       _k;
    FiniteMonoid      _monoid;
    UltraPseudometric _metric;
  };

  //! 1 / min{n : s_n != t_n} on tuples given as bit masks; 0 if equal.
  Rational contrast_rho(std::uint64_t s, std::uint64_t t);

  struct RnaCertificate {
    std::size_t        k              = 0;
    std::size_t        carrier_size   = 0;
    std::size_t        triples_checked = 0;
    NonexpansiveResult left;
    //! Expected to fail for k >= 2; the witness records the asymmetry.
    NonexpansiveResult right;
    //! Every left translation is 1-Lipschitz for d.
    bool translations_lipschitz = false;
    //! s -> (x -> sx) is injective and multiplicative, i.e. S embeds in
    //! Θ(S, d) under composition (equivalently S^op in Θ(S, d)^op).
    bool embedding_injective    = false;
    bool embedding_homomorphism = false;
    //! Every open ball B(e, r) is a submonoid.
    bool identity_balls_submonoids = false;

    bool passed() const noexcept {
      return left.holds && translations_lipschitz && embedding_injective
             && embedding_homomorphism && identity_balls_submonoids;
    }
  };

  RnaCertificate rna_certificate(ContrastMonoid const& s);

  struct ObstructionWitness {
    std::size_t j = 0;
    //! Carrier index of a tuple agreeing with the identity on coordinates
    //! 1..j.
    std::size_t u = 0;
    //! The number m (not its carrier index) with u_{m+1} = 0.
    std::size_t n = 0;
  };

  //! Finds u in U_j and a number n with u_{n+1} = 0, hence u o n = 0.
  //! Throws NoWitness when j >= k, where U_j = {identity}.
  ObstructionWitness obstruction_witness(ContrastMonoid const& s, std::size_t j);

  //! FNV-1a over the row-major table, as 16 hex digits.
  std::string table_digest(FiniteMonoid const& m);

}  // namespace stonework

#endif  // STONEWORK_CONTRAST_HPP_
