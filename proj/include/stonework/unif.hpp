#ifndef STONEWORK_UNIF_HPP_
#define STONEWORK_UNIF_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stonework/finmon.hpp"
#include "stonework/limits.hpp"
#include "stonework/partition.hpp"

namespace stonework {

  //! A base of a pre-uniformity: a finite set of equivalence relations on
  //! a common carrier, kept sorted and deduplicated.
  class PartitionFamily {
   public:
    PartitionFamily(std::size_t carrier_size, std::vector<Partition> members);

    std::size_t carrier_size() const noexcept {
      return _n;
    }

    std::size_t size() const noexcept {
      return _members.size();
    }

    std::vector<Partition> const& members() const noexcept {
      return _members;
    }

    bool contains(Partition const& p) const;

    bool is_meet_closed() const;

    //! Closed under s^{-1}(.) for every translation of the action.
    bool is_saturated_under(MonoidAction const& action) const;

    bool operator==(PartitionFamily const&) const = default;

   private:
    std::size_t            _n;
    std::vector<Partition> _members;
  };

  //! s^{-1}(p) = {(x, y) : (s(x), s(y)) in p}.
  Partition preimage_partition(SelfMap const& s, Partition const& p);

  struct Saturation {
    PartitionFamily family;
    //! Number of closure passes, the last of which added nothing.
    std::size_t rounds;
  };

  //! Least family containing gamma that is closed under s^{-1}(.) for all
  //! s and under pairwise meets.
  Saturation saturate(MonoidAction const&    action,
                      PartitionFamily const& gamma,
                      Limits const&          limits = default_limits());

  //! {(x, y) : f(x) = f(y)} for a {0,1}-valued f.
  Partition kernel_partition(std::vector<int> const& f);

  //! Meet of all members; the indiscrete partition for an empty list.
  Partition meet_all(std::size_t n, std::vector<Partition> const& ps);

  //! The only statement available about boundedness or equiuniformity of
  //! an action of a finite discrete monoid: it holds vacuously, with the
  //! singleton {s0} as the witnessing neighborhood.
  std::string boundedness_report(MonoidAction const&    action,
                                 PartitionFamily const& family);

  //! Subset of a carrier of at most 64 points.
  using PointSet = std::uint64_t;

  //! A cover of {0, ..., n - 1} by nonempty, possibly overlapping blocks.
  class Cover {
   public:
    static constexpr std::size_t max_points = 64;

    //! Throws InvalidArgument unless blocks are nonempty subsets of the
    //! carrier whose union is the carrier.  Duplicates are dropped.
    Cover(std::size_t carrier_size, std::vector<PointSet> blocks);

    static Cover from_partition(Partition const& p);

    std::size_t carrier_size() const noexcept {
      return _n;
    }

    std::vector<PointSet> const& blocks() const noexcept {
      return _blocks;
    }

    PointSet carrier() const noexcept;

    bool operator==(Cover const&) const = default;

   private:
    std::size_t           _n;
    std::vector<PointSet> _blocks;
  };

  //! P ∧ Q = {A ∩ B : A in P, B in Q}, empty sets dropped.
  Cover cover_wedge(Cover const& P, Cover const& Q);

  //! st(A, P): union of the blocks of P meeting A.
  PointSet star(PointSet A, Cover const& P);

  //! P* = {st(A, P) : A in P}.
  Cover cover_star(Cover const& P);

  //! Q ≻ P: every block of Q lies inside some block of P.
  bool refines(Cover const& Q, Cover const& P);

  //! P ≻* Q, i.e. P* ≻ Q.
  bool star_refines(Cover const& P, Cover const& Q);

  //! Number of blocks containing x.
  std::size_t order_at(Cover const& P, std::size_t x);

  //! max over x of order_at(P, x).
  std::size_t cover_order(Cover const& P);

}  // namespace stonework

#endif  // STONEWORK_UNIF_HPP_
