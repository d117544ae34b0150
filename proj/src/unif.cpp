#include "stonework/unif.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "stonework/error.hpp"

namespace stonework {

  ////////////////////////////////////////////////////////////////////////
  // PartitionFamily
  ////////////////////////////////////////////////////////////////////////

  PartitionFamily::PartitionFamily(std::size_t carrier_size, std::vector<Partition> members)
      : _n(carrier_size), _members(std::move(members)) {
    for (auto const& p : _members) {
      if (p.carrier_size() != _n) {
        throw CarrierMismatch("family member on a different carrier");
      }
    }
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
  }

  bool PartitionFamily::contains(Partition const& p) const {
    return std::binary_search(_members.begin(), _members.end(), p);
  }

  bool PartitionFamily::is_meet_closed() const {
    for (auto const& a : _members) {
      for (auto const& b : _members) {
        if (!contains(meet(a, b))) {
          return false;
        }
      }
    }
    return true;
  }

  bool PartitionFamily::is_saturated_under(MonoidAction const& action) const {
    if (action.carrier_size() != _n) {
      throw CarrierMismatch("action and family on different carriers");
    }
    for (std::size_t s = 0; s < action.monoid().size(); ++s) {
      SelfMap const t = action.translation(s);
      for (auto const& p : _members) {
        if (!contains(preimage_partition(t, p))) {
          return false;
        }
      }
    }
    return true;
  }

  Partition preimage_partition(SelfMap const& s, Partition const& p) {
    if (s.size() != p.carrier_size()) {
      throw DimensionMismatch("self-map and partition on different carriers");
    }
    std::vector<std::size_t> labels(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      labels[x] = p.class_of(s[x]);
    }
    return Partition(std::move(labels));
  }

  Saturation saturate(MonoidAction const&    action,
                      PartitionFamily const& gamma,
                      Limits const&          limits) {
    std::size_t const n = gamma.carrier_size();
    if (action.carrier_size() != n) {
      throw CarrierMismatch("action and family on different carriers");
    }
    std::vector<SelfMap> translations;
    for (std::size_t s = 0; s < action.monoid().size(); ++s) {
      translations.push_back(action.translation(s));
    }
    std::set<Partition> family(gamma.members().begin(), gamma.members().end());
    std::size_t         rounds = 0;
    while (true) {
      ++rounds;
      std::set<Partition> next = family;
      for (auto const& p : family) {
        for (auto const& t : translations) {
          next.insert(preimage_partition(t, p));
        }
        for (auto const& q : family) {
          next.insert(meet(p, q));
        }
      }
      check_enum_bound("saturated family", static_cast<long double>(next.size()),
                       limits.max_enum);
      if (next.size() == family.size()) {
        break;
      }
      family = std::move(next);
    }
    return {PartitionFamily(n, {family.begin(), family.end()}), rounds};
  }

  Partition kernel_partition(std::vector<int> const& f) {
    for (int v : f) {
      if (v != 0 && v != 1) {
        throw InvalidArgument("kernel_partition needs a {0,1}-valued function");
      }
    }
    return Partition(std::vector<std::size_t>(f.begin(), f.end()));
  }

  Partition meet_all(std::size_t n, std::vector<Partition> const& ps) {
    Partition out = Partition::indiscrete(n);
    for (auto const& p : ps) {
      out = meet(out, p);
    }
    return out;
  }

  std::string boundedness_report(MonoidAction const&    action,
                                 PartitionFamily const& family) {
    if (action.carrier_size() != family.carrier_size()) {
      throw CarrierMismatch("action and family on different carriers");
    }
    std::ostringstream os;
    os << "monoid of " << action.monoid().size()
       << " elements with the discrete topology acting on " << action.carrier_size()
       << " points, family of " << family.size()
       << " entourages: boundedness and equiuniformity hold vacuously; for every s0 "
          "the neighborhood {s0} witnesses (s0 x, s x) in every entourage";
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Covers
  ////////////////////////////////////////////////////////////////////////

  namespace {
    PointSet full_set(std::size_t n) {
      return n == 64 ? ~PointSet{0} : ((PointSet{1} << n) - 1);
    }

    void require_same(Cover const& P, Cover const& Q) {
      if (P.carrier_size() != Q.carrier_size()) {
        throw CarrierMismatch("covers of different carriers");
      }
    }
  }  // namespace

  Cover::Cover(std::size_t carrier_size, std::vector<PointSet> blocks)
      : _n(carrier_size), _blocks(std::move(blocks)) {
    if (_n == 0 || _n > max_points) {
      throw InvalidArgument("cover carrier must have 1 to 64 points");
    }
    PointSet const all = full_set(_n);
    PointSet       uni = 0;
    for (PointSet b : _blocks) {
      if (b == 0) {
        throw InvalidArgument("cover has an empty block");
      }
      if ((b & ~all) != 0) {
        throw InvalidArgument("cover block leaves the carrier");
      }
      uni |= b;
    }
    if (uni != all) {
      throw InvalidArgument("blocks do not cover the carrier");
    }
    std::sort(_blocks.begin(), _blocks.end());
    _blocks.erase(std::unique(_blocks.begin(), _blocks.end()), _blocks.end());
  }

  Cover Cover::from_partition(Partition const& p) {
    std::vector<PointSet> blocks;
    for (auto const& cls : p.classes()) {
      PointSet b = 0;
      for (std::size_t x : cls) {
        b |= PointSet{1} << x;
      }
      blocks.push_back(b);
    }
    return Cover(p.carrier_size(), std::move(blocks));
  }

  PointSet Cover::carrier() const noexcept {
    return full_set(_n);
  }

  Cover cover_wedge(Cover const& P, Cover const& Q) {
    require_same(P, Q);
    std::vector<PointSet> blocks;
    for (PointSet a : P.blocks()) {
      for (PointSet b : Q.blocks()) {
        if ((a & b) != 0) {
          blocks.push_back(a & b);
        }
      }
    }
    return Cover(P.carrier_size(), std::move(blocks));
  }

  PointSet star(PointSet A, Cover const& P) {
    PointSet out = 0;
    for (PointSet U : P.blocks()) {
      if ((U & A) != 0) {
        out |= U;
      }
    }
    return out;
  }

  Cover cover_star(Cover const& P) {
    std::vector<PointSet> blocks;
    for (PointSet A : P.blocks()) {
      blocks.push_back(star(A, P));
    }
    return Cover(P.carrier_size(), std::move(blocks));
  }

  bool refines(Cover const& Q, Cover const& P) {
    require_same(P, Q);
    return std::all_of(Q.blocks().begin(), Q.blocks().end(), [&](PointSet A) {
      return std::any_of(P.blocks().begin(), P.blocks().end(),
                         [A](PointSet B) { return (A & ~B) == 0; });
    });
  }

  bool star_refines(Cover const& P, Cover const& Q) {
    return refines(cover_star(P), Q);
  }

  std::size_t order_at(Cover const& P, std::size_t x) {
    if (x >= P.carrier_size()) {
      throw InvalidArgument("point out of range");
    }
    return static_cast<std::size_t>(
        std::count_if(P.blocks().begin(), P.blocks().end(),
                      [x](PointSet U) { return ((U >> x) & 1U) != 0; }));
  }

  std::size_t cover_order(Cover const& P) {
    std::size_t best = 0;
    for (std::size_t x = 0; x < P.carrier_size(); ++x) {
      best = std::max(best, order_at(P, x));
    }
    return best;
  }

}  // namespace stonework
