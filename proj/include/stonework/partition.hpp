#ifndef STONEWORK_PARTITION_HPP_
#define STONEWORK_PARTITION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "stonework/error.hpp"

namespace stonework {

  //! An equivalence relation on {0, ..., n - 1}.
  //!
  //! Stored as a class index per point, normalized so that classes are
  //! numbered in order of their first point.  Equal relations therefore
  //! have equal arrays, and operator< is a canonical total order.
  class Partition {
   public:
    //! Any labelling; it is renormalized.
    explicit Partition(std::vector<std::size_t> labels);

    static Partition discrete(std::size_t n);
    static Partition indiscrete(std::size_t n);

    //! Throws InvalidArgument unless the classes are nonempty, disjoint and
    //! cover {0, ..., n - 1}.
    static Partition from_classes(std::size_t                                n,
                                  std::vector<std::vector<std::size_t>> const& classes);

    //! Builds the partition of a relation given as a predicate, checking
    //! that the relation is an equivalence (NotAnEquivalence otherwise).
    //! Uses O(n^2) predicate calls.
    template <typename Related>
    static Partition from_relation(std::size_t n, Related&& related);

    std::size_t carrier_size() const noexcept {
      return _id.size();
    }

    std::size_t class_count() const noexcept {
      return _count;
    }

    std::size_t class_of(std::size_t x) const {
      return _id[x];
    }

    bool related(std::size_t x, std::size_t y) const {
      return _id[x] == _id[y];
    }

    std::vector<std::size_t> const& labels() const noexcept {
      return _id;
    }

    //! Classes in order of class index; each class sorted ascending.
    std::vector<std::vector<std::size_t>> classes() const;

    //! True iff every class of *this lies inside a class of coarser.
    bool refines(Partition const& coarser) const;

    bool is_discrete() const noexcept {
      return _count == _id.size();
    }

    bool is_indiscrete() const noexcept {
      return _count <= 1;
    }

    bool operator==(Partition const& that) const {
      return _id == that._id;
    }

    bool operator<(Partition const& that) const {
      return _id < that._id;
    }

   private:
    std::vector<std::size_t> _id;
    std::size_t              _count = 0;
  };

  //! Intersection of two equivalence relations.
  Partition meet(Partition const& a, Partition const& b);

  template <typename Related>
  Partition Partition::from_relation(std::size_t n, Related&& related) {
    constexpr std::size_t    unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> id(n, unset);
    std::size_t              next = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (id[x] != unset) {
        continue;
      }
      for (std::size_t y = x; y < n; ++y) {
        if (id[y] == unset && related(x, y)) {
          id[y] = next;
        }
      }
      if (id[x] != next) {
        throw NotAnEquivalence("relation is not reflexive at "
                               + std::to_string(x));
      }
      ++next;
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (static_cast<bool>(related(x, y)) != (id[x] == id[y])) {
          throw NotAnEquivalence("relation is not an equivalence at ("
                                 + std::to_string(x) + ", "
                                 + std::to_string(y) + ")");
        }
      }
    }
    return Partition(std::move(id));
  }

}  // namespace stonework

#endif  // STONEWORK_PARTITION_HPP_
