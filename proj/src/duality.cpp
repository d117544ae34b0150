#include "stonework/duality.hpp"

#include <string>
#include <vector>

#include "stonework/error.hpp"

namespace stonework {

  namespace {
    BoolRing::Element preimage(SelfMap const& s, BoolRing::Element a) {
      BoolRing::Element out = 0;
      for (std::size_t y = 0; y < s.size(); ++y) {
        if ((a >> s[y]) & 1U) {
          out |= BoolRing::Element{1} << y;
        }
      }
      return out;
    }
  }  // namespace

  RingEndo phi(SelfMap const& s, BoolRing const& ring) {
    std::size_t const n = ring.atom_count();
    if (s.size() != n) {
      throw DimensionMismatch("self-map on " + std::to_string(s.size())
                              + " points but the ring has "
                              + std::to_string(n) + " atoms");
    }
    for (Point y : s) {
      if (y >= n) {
        throw InvalidArgument("self-map value out of range");
      }
    }
    std::vector<BoolRing::Element> images(n);
    for (std::size_t a = 0; a < n; ++a) {
      images[a] = preimage(s, ring.atom(a));
    }
    return RingEndo(ring, std::move(images));
  }

  SelfMap phi_inverse(RingEndo const& mu) {
    std::size_t const n = mu.ring().atom_count();
    SelfMap           s(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t y = 0; y < n; ++y) {
        if ((mu.atom_images()[a] >> y) & 1U) {
          s[y] = static_cast<Point>(a);
        }
      }
    }
    return s;
  }

  GroupEndo delta_adjoint(GroupEndo const& sigma) {
    BoolRing const&            ring = sigma.ring();
    std::size_t const          n    = ring.atom_count();
    std::vector<std::uint32_t> rows(n, 0);
    // sigma*(e_j) is the functional x -> e_j(sigma x); read it off on the
    // atoms to get column j of the adjoint.
    for (std::size_t j = 0; j < n; ++j) {
      DualGroup::Functional const f = ring.atom(j);
      for (std::size_t i = 0; i < n; ++i) {
        if (DualGroup::pairing(sigma.apply(ring.atom(i)), f)) {
          rows[i] |= std::uint32_t{1} << j;
        }
      }
    }
    return GroupEndo(ring, std::move(rows));
  }

  DualGroup::Functional delta_eval(Point y, BoolRing const& ring) {
    if (y >= ring.atom_count()) {
      throw InvalidArgument("point " + std::to_string(y) + " out of range");
    }
    return ring.atom(y);
  }

  GroupEndo h_embed(SelfMap const& s, BoolRing const& ring) {
    return delta_adjoint(phi(s, ring).as_group_endo());
  }

  EntourageMembership entourage_transport(BoolRing::Element chi,
                                          SelfMap const&    s1,
                                          SelfMap const&    s2) {
    if (s1.size() != s2.size()) {
      throw DimensionMismatch("self-maps on different carriers");
    }
    BoolRing const ring(s1.size());
    if (!ring.contains(chi)) {
      throw InvalidArgument("chi is not an element of the ring");
    }
    EntourageMembership out{};
    out.preimage = preimage(s1, chi) == preimage(s2, chi);

    RingEndo const mu1 = phi(s1, ring);
    RingEndo const mu2 = phi(s2, ring);
    out.ring_image     = mu1.apply(chi) == mu2.apply(chi);

    GroupEndo const d1 = delta_adjoint(mu1.as_group_endo());
    GroupEndo const d2 = delta_adjoint(mu2.as_group_endo());
    out.dual_action    = true;
    for (auto psi : DualGroup(ring).functionals()) {
      if (DualGroup::pairing(chi, d1.apply(psi))
          != DualGroup::pairing(chi, d2.apply(psi))) {
        out.dual_action = false;
        break;
      }
    }
    return out;
  }

  Partition entourage_partition(BoolRing::Element    chi,
                                SelfMapMonoid const& maps,
                                EntourageSide        side) {
    return Partition::from_relation(maps.size(), [&](std::size_t i, std::size_t j) {
      auto m = entourage_transport(chi, maps.element(i), maps.element(j));
      switch (side) {
        case EntourageSide::preimage:
          return m.preimage;
        case EntourageSide::ring_image:
          return m.ring_image;
        case EntourageSide::dual_action:
          return m.dual_action;
      }
      return false;
    });
  }

}  // namespace stonework
