#include "stonework/boolring.hpp"

#include <algorithm>
#include <string>

#include "stonework/error.hpp"

namespace stonework {

  namespace {
    // Reverses the low n bits so that numeric order matches bitstring order.
    std::uint32_t bitstring_rank(std::uint32_t x, std::size_t n) {
      std::uint32_t r = 0;
      for (std::size_t i = 0; i < n; ++i) {
        r = (r << 1) | ((x >> i) & 1U);
      }
      return r;
    }

    bool lex_less(std::vector<std::uint32_t> const& a,
                  std::vector<std::uint32_t> const& b,
                  std::size_t                       n) {
      return std::lexicographical_compare(
          a.begin(), a.end(), b.begin(), b.end(), [n](auto x, auto y) {
            return bitstring_rank(x, n) < bitstring_rank(y, n);
          });
    }
  }  // namespace

  BoolRing::BoolRing(std::size_t atom_count) : _n(atom_count) {
    if (atom_count == 0 || atom_count > max_atoms) {
      throw InvalidArgument("atom count must lie in [1, 31], got "
                            + std::to_string(atom_count));
    }
  }

  std::string to_bitstring(std::uint32_t x, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      if ((x >> i) & 1U) {
        s[i] = '1';
      }
    }
    return s;
  }

  std::uint32_t parse_bitstring(std::string const& s, std::size_t n) {
    if (s.size() != n) {
      throw InvalidArgument("bitstring '" + s + "' should have length "
                            + std::to_string(n));
    }
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i] == '1') {
        x |= std::uint32_t{1} << i;
      } else if (s[i] != '0') {
        throw InvalidArgument("bitstring '" + s + "' has a character other "
                              "than 0 or 1");
      }
    }
    return x;
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupEndo
  ////////////////////////////////////////////////////////////////////////

  GroupEndo::GroupEndo(BoolRing ring, std::vector<std::uint32_t> rows)
      : _ring(ring), _rows(std::move(rows)) {
    if (_rows.size() != _ring.atom_count()) {
      throw DimensionMismatch("group endomorphism needs "
                              + std::to_string(_ring.atom_count()) + " rows");
    }
    for (auto r : _rows) {
      if (!_ring.contains(r)) {
        throw InvalidArgument("matrix row out of range");
      }
    }
  }

  GroupEndo GroupEndo::identity(BoolRing ring) {
    std::vector<std::uint32_t> rows(ring.atom_count());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i] = ring.atom(i);
    }
    return GroupEndo(ring, std::move(rows));
  }

  BoolRing::Element GroupEndo::apply(BoolRing::Element x) const noexcept {
    BoolRing::Element y = 0;
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      if (parity_pairing(_rows[i], x)) {
        y |= BoolRing::Element{1} << i;
      }
    }
    return y;
  }

  BoolRing::Element GroupEndo::column(std::size_t j) const noexcept {
    return apply(_ring.atom(j));
  }

  GroupEndo GroupEndo::transpose() const {
    std::vector<std::uint32_t> rows(_rows.size(), 0);
    for (std::size_t i = 0; i < _rows.size(); ++i) {
      rows[i] = column(i);
    }
    return GroupEndo(_ring, std::move(rows));
  }

  bool GroupEndo::operator<(GroupEndo const& that) const {
    return lex_less(_rows, that._rows, _ring.atom_count());
  }

  GroupEndo compose(GroupEndo const& f, GroupEndo const& g) {
    if (f.ring() != g.ring()) {
      throw DimensionMismatch("composing endomorphisms of different rings");
    }
    // Row i of fg is the sum of the rows of g selected by row i of f.
    std::vector<std::uint32_t> rows(f.rows().size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t k = 0; k < rows.size(); ++k) {
        if (f.entry(i, k)) {
          rows[i] ^= g.rows()[k];
        }
      }
    }
    return GroupEndo(f.ring(), std::move(rows));
  }

  ////////////////////////////////////////////////////////////////////////
  // RingEndo
  ////////////////////////////////////////////////////////////////////////

  bool is_ring_endo(BoolRing const&                       ring,
                    std::vector<BoolRing::Element> const& atom_images) {
    if (atom_images.size() != ring.atom_count()) {
      return false;
    }
    BoolRing::Element sum = 0;
    for (std::size_t a = 0; a < atom_images.size(); ++a) {
      if (!ring.contains(atom_images[a])) {
        return false;
      }
      for (std::size_t b = a + 1; b < atom_images.size(); ++b) {
        if (BoolRing::mul(atom_images[a], atom_images[b]) != 0) {
          return false;
        }
      }
      sum = BoolRing::add(sum, atom_images[a]);
    }
    return sum == ring.one();
  }

  RingEndo::RingEndo(BoolRing ring, std::vector<BoolRing::Element> atom_images)
      : _ring(ring), _images(std::move(atom_images)) {
    if (_images.size() != _ring.atom_count()) {
      throw DimensionMismatch("ring endomorphism needs "
                              + std::to_string(_ring.atom_count())
                              + " atom images");
    }
    if (!is_ring_endo(_ring, _images)) {
      throw InvalidArgument("atom images are not pairwise disjoint with "
                            "union one");
    }
  }

  RingEndo RingEndo::identity(BoolRing ring) {
    std::vector<BoolRing::Element> images(ring.atom_count());
    for (std::size_t a = 0; a < images.size(); ++a) {
      images[a] = ring.atom(a);
    }
    return RingEndo(ring, std::move(images));
  }

  BoolRing::Element RingEndo::apply(BoolRing::Element x) const noexcept {
    BoolRing::Element y = 0;
    for (std::size_t a = 0; a < _images.size(); ++a) {
      if ((x >> a) & 1U) {
        y ^= _images[a];
      }
    }
    return y;
  }

  GroupEndo RingEndo::as_group_endo() const {
    std::vector<std::uint32_t> rows(_images.size(), 0);
    for (std::size_t j = 0; j < _images.size(); ++j) {
      for (std::size_t i = 0; i < _images.size(); ++i) {
        if ((_images[j] >> i) & 1U) {
          rows[i] |= std::uint32_t{1} << j;
        }
      }
    }
    return GroupEndo(_ring, std::move(rows));
  }

  bool RingEndo::operator<(RingEndo const& that) const {
    return lex_less(_images, that._images, _ring.atom_count());
  }

  RingEndo compose(RingEndo const& f, RingEndo const& g) {
    if (f.ring() != g.ring()) {
      throw DimensionMismatch("composing endomorphisms of different rings");
    }
    std::vector<BoolRing::Element> images(g.atom_images().size());
    for (std::size_t a = 0; a < images.size(); ++a) {
      images[a] = f.apply(g.atom_images()[a]);
    }
    return RingEndo(f.ring(), std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Assigns atom images one at a time from the points not yet covered;
    // the last atom takes whatever is left.
    void extend_ring_endo(BoolRing const&                 ring,
                          std::size_t                     a,
                          BoolRing::Element               free,
                          std::vector<BoolRing::Element>& images,
                          std::vector<RingEndo>&          out) {
      std::size_t const n = ring.atom_count();
      if (a + 1 == n) {
        images[a] = free;
        out.emplace_back(ring, images);
        return;
      }
      // Every submask of free, including 0.
      BoolRing::Element sub = free;
      while (true) {
        images[a] = sub;
        extend_ring_endo(ring, a + 1, free & ~sub, images, out);
        if (sub == 0) {
          break;
        }
        sub = (sub - 1) & free;
      }
    }
  }  // namespace

  std::vector<RingEndo> enumerate_ring_endos(BoolRing const& ring,
                                             Limits const&   limits) {
    std::size_t const n = ring.atom_count();
    check_enum_bound("ring endomorphisms", power_ld(n, n), limits.max_enum);
    std::vector<RingEndo>          out;
    std::vector<BoolRing::Element> images(n, 0);
    extend_ring_endo(ring, 0, ring.one(), images, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<GroupEndo> enumerate_group_endos(BoolRing const& ring,
                                               Limits const&   limits) {
    std::size_t const n    = ring.atom_count();
    std::size_t const bits = n * n;
    check_enum_bound("group endomorphisms", power_ld(2, bits), limits.max_enum);
    std::vector<GroupEndo> out;
    out.reserve(std::size_t{1} << bits);
    // Reading the counter most significant bit first walks the matrix in
    // row-major bitstring order, so increasing counters are canonical.
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << bits); ++c) {
      std::vector<std::uint32_t> rows(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if ((c >> (bits - 1 - (i * n + j))) & 1U) {
            rows[i] |= std::uint32_t{1} << j;
          }
        }
      }
      out.emplace_back(ring, std::move(rows));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Duals
  ////////////////////////////////////////////////////////////////////////

  std::vector<DualGroup::Functional> DualGroup::functionals() const {
    std::vector<Functional> out(size());
    for (std::size_t f = 0; f < size(); ++f) {
      out[f] = static_cast<Functional>(f);
    }
    return out;
  }

  std::vector<bool> DualGroup::double_dual(BoolRing::Element x) const {
    std::vector<bool> row(size());
    for (std::size_t f = 0; f < size(); ++f) {
      row[f] = pairing(x, static_cast<Functional>(f));
    }
    return row;
  }

  DualGroup pontryagin_dual(BoolRing const& ring) {
    return DualGroup(ring);
  }

  std::vector<DualGroup::Functional> ring_homs_to_Z2(BoolRing const& ring) {
    std::vector<DualGroup::Functional> out;
    std::size_t const                  n = ring.atom_count();
    for (auto f : DualGroup(ring).functionals()) {
      if (!DualGroup::pairing(ring.one(), f)) {
        continue;
      }
      // f(xy) and f(x)f(y) are both bilinear, so agreeing on pairs of
      // atoms is enough.
      bool mult = true;
      for (std::size_t a = 0; a < n && mult; ++a) {
        for (std::size_t b = 0; b < n && mult; ++b) {
          bool lhs = DualGroup::pairing(BoolRing::mul(ring.atom(a), ring.atom(b)), f);
          bool rhs = DualGroup::pairing(ring.atom(a), f)
                     && DualGroup::pairing(ring.atom(b), f);
          mult     = (lhs == rhs);
        }
      }
      if (mult) {
        out.push_back(f);
      }
    }
    return out;
  }

}  // namespace stonework
