#ifndef STONEWORK_DUALITY_HPP_
#define STONEWORK_DUALITY_HPP_

#include <cstddef>

#include "stonework/boolring.hpp"
#include "stonework/finmon.hpp"
#include "stonework/partition.hpp"

namespace stonework {

  // Y is a finite discrete space with points 0..n-1 and B = C(Y, Z_2) is
  // the Boolean ring whose atoms are the points of Y.  An element of B is
  // the characteristic function of a subset A of Y.

  //! s -> s*, where s*(chi) = chi o s, i.e. chi_A -> chi_{s^{-1}(A)}.
  //! Throws DimensionMismatch if the map is not on atom_count points.
  RingEndo phi(SelfMap const& s, BoolRing const& ring);

  //! Inverse of phi: s(y) is the unique atom whose image contains y.
  SelfMap phi_inverse(RingEndo const& mu);

  //! sigma -> sigma*, where sigma*(f) = f o sigma for f in B*.  The result
  //! acts on functionals written in the dual coordinates of DualGroup.
  GroupEndo delta_adjoint(GroupEndo const& sigma);

  //! delta_y(chi) = chi(y).
  DualGroup::Functional delta_eval(Point y, BoolRing const& ring);

  //! h = Delta o Phi : C(Y, Y) -> End(B*).
  GroupEndo h_embed(SelfMap const& s, BoolRing const& ring);

  //! Membership of (s1, s2) in the three entourages indexed by chi.
  struct EntourageMembership {
    bool preimage;    // [chi]_1: s1^{-1}(A) = s2^{-1}(A)
    bool ring_image;  // [chi]_2: Phi(s1)(chi) = Phi(s2)(chi)
    bool dual_action; // [chi]_3: psi(s1*(chi)) = psi(s2*(chi)) for all psi

    bool consistent() const noexcept {
      return preimage == ring_image && ring_image == dual_action;
    }
  };

  //! Evaluates the three relations independently.  [chi]_3 quantifies over
  //! all 2^n functionals through the action of Delta(Phi(s_i)) on B*.
  EntourageMembership entourage_transport(BoolRing::Element chi,
                                          SelfMap const&    s1,
                                          SelfMap const&    s2);

  enum class EntourageSide { preimage, ring_image, dual_action };

  //! The relation [chi]_k as a partition of the elements of maps.
  Partition entourage_partition(BoolRing::Element    chi,
                                SelfMapMonoid const& maps,
                                EntourageSide        side);

}  // namespace stonework

#endif  // STONEWORK_DUALITY_HPP_
