#ifndef STONEWORK_NAVECTOR_HPP_
#define STONEWORK_NAVECTOR_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "stonework/finmon.hpp"
#include "stonework/limits.hpp"
#include "stonework/rational.hpp"
#include "stonework/ultra.hpp"

namespace stonework {

  //! An ultra-metric space (M, d) prepared for the free Z_2-vector space
  //! over it.  The metric is truncated to min(d, 1) and extended by a zero
  //! point at distance 1 from every point of M.  The zero point has index
  //! point_count().
  class KantorovichSpace {
   public:
    static constexpr std::size_t max_points = 63;

    explicit KantorovichSpace(UltraPseudometric const& d);

    std::size_t point_count() const noexcept {
      return _base.carrier_size();
    }

    std::size_t zero_point() const noexcept {
      return point_count();
    }

    //! min(d, 1) on M.
    UltraPseudometric const& base() const noexcept {
      return _base;
    }

    //! The metric on M with the zero point adjoined.
    UltraPseudometric const& extended() const noexcept {
      return _extended;
    }

   private:
    UltraPseudometric _base;
    UltraPseudometric _extended;
  };

  //! A vector of the free Z_2-vector space on M, i.e. a finite subset of M
  //! (its support).  Addition is symmetric difference.
  class FreeVector {
   public:
    FreeVector() = default;
    explicit FreeVector(std::uint64_t support) : _support(support) {}

    static FreeVector from_points(std::vector<std::size_t> const& points);

    std::uint64_t support() const noexcept {
      return _support;
    }

    std::vector<std::size_t> points() const;

    std::size_t support_size() const noexcept;

    bool is_zero() const noexcept {
      return _support == 0;
    }

    friend FreeVector operator+(FreeVector u, FreeVector v) noexcept {
      return FreeVector(u._support ^ v._support);
    }

    bool operator==(FreeVector const&) const = default;

   private:
    std::uint64_t _support = 0;
  };

  struct KantorovichNorm {
    Rational value;
    //! An optimal representation v = sum (x_i - y_i); the zero point
    //! appears as KantorovichSpace::zero_point().
    std::vector<std::pair<std::size_t, std::size_t>> pairing;
  };

  //! The maximal ultra-norm extending d, evaluated as the minimum over
  //! pairings of the support (points may also pair with the zero point) of
  //! the largest pair distance.
  KantorovichNorm kantorovich_norm(KantorovichSpace const& space,
                                   FreeVector              v,
                                   Limits const&           limits = default_limits());

  //! Linear extension of a 1-Lipschitz f: the support maps pointwise and
  //! colliding images cancel.  Throws NotLipschitz if f is not 1-Lipschitz
  //! for min(d, 1).
  FreeVector lipschitz_linear_extend(KantorovichSpace const& space,
                                     SelfMap const&          f,
                                     FreeVector              v);

}  // namespace stonework

#endif  // STONEWORK_NAVECTOR_HPP_
