#ifndef STONEWORK_FINMON_HPP_
#define STONEWORK_FINMON_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stonework/limits.hpp"

namespace stonework {

  //! A point of a finite carrier {0, ..., n - 1}.
  using Point = std::uint32_t;

  //! A self-map of {0, ..., n - 1}, stored as its value array.
  using SelfMap = std::vector<Point>;

  //! (f o g)(x) = f(g(x)).
  SelfMap compose(SelfMap const& f, SelfMap const& g);

  SelfMap identity_map(std::size_t n);

  bool is_injective(SelfMap const& f);

  //! Finite monoid given by its full multiplication table.
  //!
  //! Rows are indexed by the left factor: product(x, y) is xy.  Instances
  //! are only created through validate_monoid (or the constructions in this
  //! header, which produce tables that satisfy the axioms by construction
  //! and are validated anyway), so every FiniteMonoid is associative and
  //! unital.
  class FiniteMonoid {
   public:
    using Table = std::vector<std::vector<std::size_t>>;

    std::size_t size() const noexcept {
      return _size;
    }

    std::size_t identity() const noexcept {
      return _identity;
    }

    std::size_t product(std::size_t x, std::size_t y) const {
      return _table[x * _size + y];
    }

    Table table() const;

    bool is_commutative() const;

    bool operator==(FiniteMonoid const&) const = default;

   private:
    friend FiniteMonoid validate_monoid(Table const&, std::size_t);

    FiniteMonoid(std::size_t size, std::size_t identity,
                 std::vector<std::size_t> flat)
        : _size(size), _identity(identity), _table(std::move(flat)) {}

    std::size_t              _size;
    std::size_t              _identity;
    std::vector<std::size_t> _table;
  };

  //! Checks shape, range, the identity laws and associativity, in that
  //! order.  Throws InvalidArgument for shape/range problems,
  //! IdentityViolation(x) for the first x (ascending) breaking an identity
  //! law, and AssociativityViolation(x, y, z) for the lexicographically
  //! first failing triple.
  FiniteMonoid validate_monoid(FiniteMonoid::Table const& table,
                               std::size_t                identity);

  //! table'[x][y] = table[y][x].
  FiniteMonoid opposite(FiniteMonoid const& m);

  //! Turns a finite semigroup table into a monoid by adjoining a new
  //! identity element, which receives index size().
  FiniteMonoid adjoin_identity(FiniteMonoid::Table const& semigroup);

  bool is_submonoid(FiniteMonoid const& m, std::vector<std::size_t> const& subset);

  //! A submonoid of the full transformation monoid on a finite carrier.
  //!
  //! Elements are kept in lexicographic order of their value arrays.  The
  //! product of elements i and j is the index of element(i) o element(j).
  class SelfMapMonoid {
   public:
    //! Checks that every element is a self-map of the carrier, that the
    //! identity is present, and that the set is closed under composition.
    //! Duplicates are dropped.
    static SelfMapMonoid from_elements(std::size_t          carrier_size,
                                       std::vector<SelfMap> elements);

    std::size_t carrier_size() const noexcept {
      return _carrier;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    SelfMap const& element(std::size_t i) const {
      return _elements[i];
    }

    std::vector<SelfMap> const& elements() const noexcept {
      return _elements;
    }

    std::optional<std::size_t> index_of(SelfMap const& f) const;

    bool contains(SelfMap const& f) const {
      return index_of(f).has_value();
    }

    std::size_t identity_index() const;

    std::size_t product(std::size_t i, std::size_t j) const;

    //! Materializes the multiplication table; size()^2 must fit the bound.
    FiniteMonoid to_monoid(Limits const& limits = default_limits()) const;

    bool operator==(SelfMapMonoid const&) const = default;

   private:
    friend SelfMapMonoid make_selfmap_monoid_unchecked(std::size_t,
                                                       std::vector<SelfMap>);
    SelfMapMonoid(std::size_t carrier, std::vector<SelfMap> sorted)
        : _carrier(carrier), _elements(std::move(sorted)) {}

    std::size_t          _carrier;
    std::vector<SelfMap> _elements;
  };

  // For constructions whose closure is guaranteed by the caller (full
  // monoids, filtered enumerations); sorts and deduplicates only.
  SelfMapMonoid make_selfmap_monoid_unchecked(std::size_t          carrier_size,
                                              std::vector<SelfMap> elements);

  //! All n^n self-maps of {0, ..., n - 1} in lexicographic order.
  SelfMapMonoid full_selfmap_monoid(std::size_t   n,
                                    Limits const& limits = default_limits());

  //! The submonoid generated by the given maps (identity included).
  SelfMapMonoid generate_selfmap_monoid(std::size_t                 n,
                                        std::vector<SelfMap> const& generators,
                                        Limits const& limits = default_limits());

  //! Left-regular representation s -> (x -> sx).
  struct CayleyEmbedding {
    SelfMapMonoid image;
    //! element_to_map[s] is the index of h(s) in image.
    std::vector<std::size_t> element_to_map;
  };

  CayleyEmbedding cayley_embed(FiniteMonoid const& m);

  //! The left translation x -> sx as a self-map of the carrier of m.
  SelfMap left_translation(FiniteMonoid const& m, std::size_t s);

  //! A left monoidal action S x X -> X given by its table act[s][x].
  class MonoidAction {
   public:
    //! Throws InvalidArgument unless act[e][x] = x and
    //! act[st][x] = act[s][act[t][x]] for all s, t, x.
    MonoidAction(FiniteMonoid                         monoid,
                 std::size_t                          carrier_size,
                 std::vector<std::vector<std::size_t>> act);

    //! The action of a transformation monoid on its carrier.
    static MonoidAction natural(SelfMapMonoid const& m,
                                Limits const&        limits = default_limits());

    //! The action of a monoid on itself by left multiplication.
    static MonoidAction left_regular(FiniteMonoid const& m);

    FiniteMonoid const& monoid() const noexcept {
      return _monoid;
    }

    std::size_t carrier_size() const noexcept {
      return _carrier;
    }

    std::size_t act(std::size_t s, std::size_t x) const {
      return _act[s][x];
    }

    //! The s-translation x -> sx of the carrier.
    SelfMap translation(std::size_t s) const;

    std::vector<std::vector<std::size_t>> const& table() const noexcept {
      return _act;
    }

   private:
    FiniteMonoid                          _monoid;
    std::size_t                           _carrier;
    std::vector<std::vector<std::size_t>> _act;
  };

}  // namespace stonework

#endif  // STONEWORK_FINMON_HPP_
