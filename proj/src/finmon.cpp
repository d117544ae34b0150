#include "stonework/finmon.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "stonework/error.hpp"

namespace stonework {

  SelfMap compose(SelfMap const& f, SelfMap const& g) {
    if (f.size() != g.size()) {
      throw DimensionMismatch("cannot compose self-maps of carriers "
                              + std::to_string(f.size()) + " and "
                              + std::to_string(g.size()));
    }
    SelfMap out(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) {
      out[x] = f[g[x]];
    }
    return out;
  }

  SelfMap identity_map(std::size_t n) {
    SelfMap id(n);
    for (std::size_t x = 0; x < n; ++x) {
      id[x] = static_cast<Point>(x);
    }
    return id;
  }

  bool is_injective(SelfMap const& f) {
    std::vector<bool> seen(f.size(), false);
    for (Point y : f) {
      if (seen[y]) {
        return false;
      }
      seen[y] = true;
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteMonoid
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid::Table FiniteMonoid::table() const {
    Table t(_size, std::vector<std::size_t>(_size));
    for (std::size_t x = 0; x < _size; ++x) {
      for (std::size_t y = 0; y < _size; ++y) {
        t[x][y] = product(x, y);
      }
    }
    return t;
  }

  bool FiniteMonoid::is_commutative() const {
    for (std::size_t x = 0; x < _size; ++x) {
      for (std::size_t y = x + 1; y < _size; ++y) {
        if (product(x, y) != product(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteMonoid validate_monoid(FiniteMonoid::Table const& table,
                               std::size_t                identity) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw InvalidArgument("monoid table must be nonempty");
    }
    if (identity >= n) {
      throw InvalidArgument("identity index " + std::to_string(identity)
                            + " out of range");
    }
    std::vector<std::size_t> flat;
    flat.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      if (table[x].size() != n) {
        throw InvalidArgument("monoid table is not square (row "
                              + std::to_string(x) + ")");
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (table[x][y] >= n) {
          throw InvalidArgument("table entry (" + std::to_string(x) + ", "
                                + std::to_string(y) + ") out of range");
        }
        flat.push_back(table[x][y]);
      }
    }
    auto at = [&](std::size_t x, std::size_t y) { return flat[x * n + y]; };
    for (std::size_t x = 0; x < n; ++x) {
      if (at(identity, x) != x || at(x, identity) != x) {
        throw IdentityViolation(x);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t const xy = at(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          if (at(xy, z) != at(x, at(y, z))) {
            throw AssociativityViolation(x, y, z);
          }
        }
      }
    }
    return FiniteMonoid(n, identity, std::move(flat));
  }

  FiniteMonoid opposite(FiniteMonoid const& m) {
    auto t = m.table();
    for (std::size_t x = 0; x < m.size(); ++x) {
      for (std::size_t y = 0; y < m.size(); ++y) {
        t[x][y] = m.product(y, x);
      }
    }
    return validate_monoid(t, m.identity());
  }

  FiniteMonoid adjoin_identity(FiniteMonoid::Table const& semigroup) {
    std::size_t const   n = semigroup.size();
    FiniteMonoid::Table t(n + 1, std::vector<std::size_t>(n + 1));
    for (std::size_t x = 0; x <= n; ++x) {
      for (std::size_t y = 0; y <= n; ++y) {
        if (x == n) {
          t[x][y] = y;
        } else if (y == n) {
          t[x][y] = x;
        } else {
          if (semigroup[x].size() != n) {
            throw InvalidArgument("semigroup table is not square");
          }
          t[x][y] = semigroup[x][y];
        }
      }
    }
    return validate_monoid(t, n);
  }

  bool is_submonoid(FiniteMonoid const&             m,
                    std::vector<std::size_t> const& subset) {
    std::vector<bool> in(m.size(), false);
    for (std::size_t x : subset) {
      if (x >= m.size()) {
        throw InvalidArgument("subset element out of range");
      }
      in[x] = true;
    }
    if (!in[m.identity()]) {
      return false;
    }
    for (std::size_t x : subset) {
      for (std::size_t y : subset) {
        if (!in[m.product(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // SelfMapMonoid
  ////////////////////////////////////////////////////////////////////////

  SelfMapMonoid make_selfmap_monoid_unchecked(std::size_t          carrier_size,
                                              std::vector<SelfMap> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()),
                   elements.end());
    return SelfMapMonoid(carrier_size, std::move(elements));
  }

  SelfMapMonoid SelfMapMonoid::from_elements(std::size_t          carrier_size,
                                             std::vector<SelfMap> elements) {
    for (auto const& f : elements) {
      if (f.size() != carrier_size) {
        throw DimensionMismatch("self-map of length " + std::to_string(f.size())
                                + " on a carrier of size "
                                + std::to_string(carrier_size));
      }
      for (Point y : f) {
        if (y >= carrier_size) {
          throw InvalidArgument("self-map value out of range");
        }
      }
    }
    auto m = make_selfmap_monoid_unchecked(carrier_size, std::move(elements));
    if (!m.contains(identity_map(carrier_size))) {
      throw InvalidArgument("self-map set does not contain the identity");
    }
    for (auto const& f : m.elements()) {
      for (auto const& g : m.elements()) {
        if (!m.contains(compose(f, g))) {
          throw InvalidArgument("self-map set is not closed under composition");
        }
      }
    }
    return m;
  }

  std::optional<std::size_t> SelfMapMonoid::index_of(SelfMap const& f) const {
    auto it = std::lower_bound(_elements.begin(), _elements.end(), f);
    if (it == _elements.end() || *it != f) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _elements.begin());
  }

  std::size_t SelfMapMonoid::identity_index() const {
    return *index_of(identity_map(_carrier));
  }

  std::size_t SelfMapMonoid::product(std::size_t i, std::size_t j) const {
    auto k = index_of(compose(_elements[i], _elements[j]));
    if (!k) {
      throw InvalidArgument("self-map monoid is not closed under composition");
    }
    return *k;
  }

  FiniteMonoid SelfMapMonoid::to_monoid(Limits const& limits) const {
    check_enum_bound("self-map monoid table",
                     static_cast<long double>(size()) * size(),
                     limits.max_enum);
    FiniteMonoid::Table t(size(), std::vector<std::size_t>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        t[i][j] = product(i, j);
      }
    }
    return validate_monoid(t, identity_index());
  }

  SelfMapMonoid full_selfmap_monoid(std::size_t n, Limits const& limits) {
    if (n == 0) {
      throw InvalidArgument("carrier size must be positive");
    }
    check_enum_bound("full self-map monoid", power_ld(n, n), limits.max_enum);
    std::vector<SelfMap> all;
    SelfMap              f(n, 0);
    // Odometer with position 0 most significant gives lexicographic order.
    while (true) {
      all.push_back(f);
      std::size_t pos = n;
      while (pos > 0) {
        --pos;
        if (++f[pos] < n) {
          break;
        }
        f[pos] = 0;
        if (pos == 0) {
          return make_selfmap_monoid_unchecked(n, std::move(all));
        }
      }
    }
  }

  SelfMapMonoid generate_selfmap_monoid(std::size_t                 n,
                                        std::vector<SelfMap> const& generators,
                                        Limits const&               limits) {
    std::set<SelfMap>   seen{identity_map(n)};
    std::deque<SelfMap> todo{identity_map(n)};
    for (auto const& g : generators) {
      if (g.size() != n) {
        throw DimensionMismatch("generator has the wrong carrier size");
      }
    }
    while (!todo.empty()) {
      SelfMap f = std::move(todo.front());
      todo.pop_front();
      for (auto const& g : generators) {
        SelfMap h = compose(g, f);
        if (seen.insert(h).second) {
          check_enum_bound("generated self-map monoid",
                           static_cast<long double>(seen.size()),
                           limits.max_enum);
          todo.push_back(std::move(h));
        }
      }
    }
    return make_selfmap_monoid_unchecked(
        n, std::vector<SelfMap>(seen.begin(), seen.end()));
  }

  SelfMap left_translation(FiniteMonoid const& m, std::size_t s) {
    SelfMap f(m.size());
    for (std::size_t x = 0; x < m.size(); ++x) {
      f[x] = static_cast<Point>(m.product(s, x));
    }
    return f;
  }

  CayleyEmbedding cayley_embed(FiniteMonoid const& m) {
    std::vector<SelfMap> maps;
    maps.reserve(m.size());
    for (std::size_t s = 0; s < m.size(); ++s) {
      maps.push_back(left_translation(m, s));
    }
    auto image = make_selfmap_monoid_unchecked(m.size(), maps);
    std::vector<std::size_t> index(m.size());
    for (std::size_t s = 0; s < m.size(); ++s) {
      index[s] = *image.index_of(maps[s]);
    }
    return {std::move(image), std::move(index)};
  }

  ////////////////////////////////////////////////////////////////////////
  // MonoidAction
  ////////////////////////////////////////////////////////////////////////

  MonoidAction::MonoidAction(FiniteMonoid                          monoid,
                             std::size_t                           carrier_size,
                             std::vector<std::vector<std::size_t>> act)
      : _monoid(std::move(monoid)), _carrier(carrier_size), _act(std::move(act)) {
    if (_carrier == 0) {
      throw InvalidArgument("action carrier must be nonempty");
    }
    if (_act.size() != _monoid.size()) {
      throw InvalidArgument("action table needs one row per monoid element");
    }
    for (auto const& row : _act) {
      if (row.size() != _carrier) {
        throw InvalidArgument("action row has the wrong length");
      }
      for (std::size_t y : row) {
        if (y >= _carrier) {
          throw InvalidArgument("action value out of range");
        }
      }
    }
    for (std::size_t x = 0; x < _carrier; ++x) {
      if (_act[_monoid.identity()][x] != x) {
        throw InvalidArgument("identity does not act trivially at point "
                              + std::to_string(x));
      }
    }
    for (std::size_t s = 0; s < _monoid.size(); ++s) {
      for (std::size_t t = 0; t < _monoid.size(); ++t) {
        auto const& st = _act[_monoid.product(s, t)];
        for (std::size_t x = 0; x < _carrier; ++x) {
          if (st[x] != _act[s][_act[t][x]]) {
            throw InvalidArgument("action law (st)x = s(tx) fails at s="
                                  + std::to_string(s) + ", t="
                                  + std::to_string(t) + ", x="
                                  + std::to_string(x));
          }
        }
      }
    }
  }

  MonoidAction MonoidAction::natural(SelfMapMonoid const& m,
                                     Limits const&        limits) {
    std::vector<std::vector<std::size_t>> act;
    act.reserve(m.size());
    for (auto const& f : m.elements()) {
      act.emplace_back(f.begin(), f.end());
    }
    return MonoidAction(m.to_monoid(limits), m.carrier_size(), std::move(act));
  }

  MonoidAction MonoidAction::left_regular(FiniteMonoid const& m) {
    return MonoidAction(m, m.size(), m.table());
  }

  SelfMap MonoidAction::translation(std::size_t s) const {
    return SelfMap(_act[s].begin(), _act[s].end());
  }

}  // namespace stonework
