#ifndef STONEWORK_BOOLRING_HPP_
#define STONEWORK_BOOLRING_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stonework/limits.hpp"

namespace stonework {

  //! A finite Boolean ring presented by its atoms.
  //!
  //! Elements are bit-vectors over the atoms (bit a set iff atom a lies
  //! below the element), i.e. subsets of the atom set.  Addition is XOR
  //! (symmetric difference), multiplication is AND (intersection), one is
  //! the all-ones vector.  For the ring of clopen sets of a finite discrete
  //! space Y the atoms are the points of Y and an element is the
  //! characteristic function of a subset.
  class BoolRing {
   public:
    using Element = std::uint32_t;

    static constexpr std::size_t max_atoms = 31;

    explicit BoolRing(std::size_t atom_count);

    std::size_t atom_count() const noexcept {
      return _n;
    }

    //! 2^n
    std::size_t size() const noexcept {
      return std::size_t{1} << _n;
    }

    Element zero() const noexcept {
      return 0;
    }

    Element one() const noexcept {
      return static_cast<Element>(size() - 1);
    }

    Element atom(std::size_t a) const noexcept {
      return Element{1} << a;
    }

    static Element add(Element x, Element y) noexcept {
      return x ^ y;
    }

    static Element mul(Element x, Element y) noexcept {
      return x & y;
    }

    bool contains(Element x) const noexcept {
      return (x & ~one()) == 0;
    }

    bool operator==(BoolRing const&) const = default;

   private:
    std::size_t _n;
  };

  //! Parity of popcount(x & y): the pairing of two bit-vectors over Z_2.
  inline bool parity_pairing(std::uint32_t x, std::uint32_t y) noexcept {
    return (std::popcount(x & y) & 1U) != 0;
  }

  //! '0'/'1' characters, atom 0 leftmost.
  std::string to_bitstring(std::uint32_t x, std::size_t n);
  std::uint32_t parse_bitstring(std::string const& s, std::size_t n);

  //! An additive endomorphism of B, i.e. an n x n matrix over Z_2.
  //!
  //! rows[i] holds row i as a bit-vector; the image of x has coordinate i
  //! equal to <rows[i], x>.
  class GroupEndo {
   public:
    GroupEndo(BoolRing ring, std::vector<std::uint32_t> rows);

    static GroupEndo identity(BoolRing ring);

    BoolRing const& ring() const noexcept {
      return _ring;
    }

    std::vector<std::uint32_t> const& rows() const noexcept {
      return _rows;
    }

    BoolRing::Element apply(BoolRing::Element x) const noexcept;

    //! Column j, i.e. the image of the atom j.
    BoolRing::Element column(std::size_t j) const noexcept;

    bool entry(std::size_t i, std::size_t j) const noexcept {
      return ((_rows[i] >> j) & 1U) != 0;
    }

    GroupEndo transpose() const;

    //! Canonical order: lexicographic on the row bitstrings.
    bool operator<(GroupEndo const& that) const;
    bool operator==(GroupEndo const&) const = default;

   private:
    BoolRing                   _ring;
    std::vector<std::uint32_t> _rows;
  };

  //! (f o g)(x) = f(g(x)).
  GroupEndo compose(GroupEndo const& f, GroupEndo const& g);

  //! A unital ring endomorphism of B, stored by the images of the atoms.
  class RingEndo {
   public:
    //! Throws InvalidArgument unless the atom images are pairwise disjoint
    //! and together cover one.
    RingEndo(BoolRing ring, std::vector<BoolRing::Element> atom_images);

    static RingEndo identity(BoolRing ring);

    BoolRing const& ring() const noexcept {
      return _ring;
    }

    std::vector<BoolRing::Element> const& atom_images() const noexcept {
      return _images;
    }

    //! XOR of the images of the atoms below x.
    BoolRing::Element apply(BoolRing::Element x) const noexcept;

    GroupEndo as_group_endo() const;

    bool operator<(RingEndo const& that) const;
    bool operator==(RingEndo const&) const = default;

   private:
    BoolRing                       _ring;
    std::vector<BoolRing::Element> _images;
  };

  RingEndo compose(RingEndo const& f, RingEndo const& g);

  //! True iff the generator images satisfy the ring-endomorphism
  //! invariants (pairwise products zero, sum equal to one).
  bool is_ring_endo(BoolRing const&                       ring,
                    std::vector<BoolRing::Element> const& atom_images);

  //! All unital ring endomorphisms, in canonical order.
  std::vector<RingEndo> enumerate_ring_endos(BoolRing const& ring,
                                             Limits const& limits
                                             = default_limits());

  //! All 2^{n^2} additive endomorphisms, in canonical order.
  std::vector<GroupEndo> enumerate_group_endos(BoolRing const& ring,
                                               Limits const&   limits
                                               = default_limits());

  //! The Pontryagin dual Hom(B, Z_2).
  //!
  //! Every homomorphism B -> Z_2 is x -> <f, x> for a unique bit-vector f,
  //! so functionals are stored as bit-vectors and numbered by their value.
  class DualGroup {
   public:
    using Functional = std::uint32_t;

    explicit DualGroup(BoolRing ring) : _ring(ring) {}

    BoolRing const& ring() const noexcept {
      return _ring;
    }

    std::size_t size() const noexcept {
      return _ring.size();
    }

    std::vector<Functional> functionals() const;

    //! w(x, f) = f(x)
    static bool pairing(BoolRing::Element x, Functional f) noexcept {
      return parity_pairing(x, f);
    }

    //! The canonical image of x in B**: the table f -> f(x) over all
    //! functionals in numeric order.
    std::vector<bool> double_dual(BoolRing::Element x) const;

   private:
    BoolRing _ring;
  };

  DualGroup pontryagin_dual(BoolRing const& ring);

  //! Functionals that are also multiplicative and unital.  Exactly the n
  //! atom evaluations, in ascending order.
  std::vector<DualGroup::Functional> ring_homs_to_Z2(BoolRing const& ring);

}  // namespace stonework

#endif  // STONEWORK_BOOLRING_HPP_
