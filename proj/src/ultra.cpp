#include "stonework/ultra.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "stonework/error.hpp"

namespace stonework {

  ////////////////////////////////////////////////////////////////////////
  // UltraPseudometric
  ////////////////////////////////////////////////////////////////////////

  bool satisfies_strong_triangle(DistanceMatrix const& d) {
    std::size_t const n = d.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (d[x][z] > std::max(d[x][y], d[y][z])) {
            return false;
          }
        }
      }
    }
    return true;
  }

  UltraPseudometric::UltraPseudometric(DistanceMatrix dist) : _d(std::move(dist)) {
    std::size_t const n = _d.size();
    if (n == 0) {
      throw InvalidMetric("metric carrier must be nonempty");
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (_d[x].size() != n) {
        throw InvalidMetric("distance matrix is not square");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (_d[x][x] != 0) {
        throw InvalidMetric("nonzero diagonal at " + std::to_string(x));
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (_d[x][y] < 0) {
          throw InvalidMetric("negative distance");
        }
        if (_d[x][y] != _d[y][x]) {
          throw InvalidMetric("asymmetric at (" + std::to_string(x) + ", "
                              + std::to_string(y) + ")");
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (_d[x][z] > std::max(_d[x][y], _d[y][z])) {
            throw InvalidMetric("strong triangle inequality fails at ("
                                + std::to_string(x) + ", " + std::to_string(y)
                                + ", " + std::to_string(z) + ")");
          }
        }
      }
    }
  }

  UltraPseudometric UltraPseudometric::discrete(std::size_t n) {
    DistanceMatrix d(n, std::vector<Rational>(n, Rational(1)));
    for (std::size_t x = 0; x < n; ++x) {
      d[x][x] = 0;
    }
    return UltraPseudometric(std::move(d));
  }

  Rational UltraPseudometric::diameter() const {
    Rational r(0);
    for (auto const& row : _d) {
      for (auto const& v : row) {
        r = std::max(r, v);
      }
    }
    return r;
  }

  std::vector<Rational> UltraPseudometric::distinct_values() const {
    std::set<Rational> values;
    for (auto const& row : _d) {
      values.insert(row.begin(), row.end());
    }
    return {values.begin(), values.end()};
  }

  std::vector<std::size_t> UltraPseudometric::ball(std::size_t     x,
                                                   Rational const& r) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < _d.size(); ++y) {
      if (_d[x][y] < r) {
        out.push_back(y);
      }
    }
    return out;
  }

  Partition UltraPseudometric::ball_partition(Rational const& r) const {
    return Partition::from_relation(
        _d.size(), [&](std::size_t x, std::size_t y) { return _d[x][y] < r; });
  }

  UltraPseudometric UltraPseudometric::truncated(Rational const& cap) const {
    DistanceMatrix d = _d;
    for (auto& row : d) {
      for (auto& v : row) {
        v = std::min(v, cap);
      }
    }
    return UltraPseudometric(std::move(d));
  }

  ////////////////////////////////////////////////////////////////////////
  // Chains
  ////////////////////////////////////////////////////////////////////////

  MonotoneChain::MonotoneChain(std::size_t carrier_size, std::vector<Partition> levels)
      : _n(carrier_size), _levels(std::move(levels)) {
    if (_n == 0) {
      throw InvalidArgument("chain carrier must be nonempty");
    }
    for (std::size_t i = 0; i < _levels.size(); ++i) {
      if (_levels[i].carrier_size() != _n) {
        throw CarrierMismatch("chain level " + std::to_string(i + 1)
                              + " lives on a different carrier");
      }
      if (i > 0 && !_levels[i].refines(_levels[i - 1])) {
        throw ChainNotMonotone(i + 1);
      }
    }
    if (_levels.size() > 62) {
      throw InvalidArgument("chains longer than 62 levels are not supported");
    }
  }

  Partition MonotoneChain::level(std::size_t n) const {
    if (n == 0) {
      return Partition::indiscrete(_n);
    }
    return _levels.at(n - 1);
  }

  UltraPseudometric d_from_chain(MonotoneChain const& chain, ChainTail tail) {
    std::size_t const n = chain.carrier_size();
    std::size_t const m = chain.length();
    DistanceMatrix    d(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        // Levels are nested, so the relating levels form a prefix.
        std::size_t top = 0;
        while (top < m && chain.levels()[top].related(x, y)) {
          ++top;
        }
        Rational v = (tail == ChainTail::stabilized && top == m)
                         ? Rational(0)
                         : dyadic(static_cast<unsigned>(top));
        d[x][y] = d[y][x] = v;
      }
    }
    return UltraPseudometric(std::move(d));
  }

  UltraPseudometric subdominant_ultrametric(DistanceMatrix const& weights) {
    std::size_t const n = weights.size();
    DistanceMatrix    d = weights;
    for (std::size_t x = 0; x < n; ++x) {
      if (d[x].size() != n) {
        throw InvalidMetric("weight matrix is not square");
      }
      d[x][x] = 0;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          d[x][y] = std::min(d[x][y], std::max(d[x][k], d[k][y]));
        }
      }
    }
    return UltraPseudometric(std::move(d));
  }

  UltraPseudometric sup_combine(std::vector<UltraPseudometric> const& metrics,
                                Rational const&                       cap) {
    if (metrics.empty()) {
      throw InvalidArgument("sup_combine needs at least one metric");
    }
    std::size_t const n = metrics.front().carrier_size();
    DistanceMatrix    d(n, std::vector<Rational>(n, Rational(0)));
    for (auto const& m : metrics) {
      if (m.carrier_size() != n) {
        throw CarrierMismatch("sup_combine over different carriers");
      }
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          d[x][y] = std::max(d[x][y], std::min(m(x, y), cap));
        }
      }
    }
    return UltraPseudometric(std::move(d));
  }

  ////////////////////////////////////////////////////////////////////////
  // Monoid-compatibility checks
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_same_carrier(FiniteMonoid const& m, std::size_t n) {
      if (m.size() != n) {
        throw CarrierMismatch("object on " + std::to_string(n)
                              + " points does not match a monoid of size "
                              + std::to_string(m.size()));
      }
    }
  }  // namespace

  NonexpansiveResult check_nonexpansive(FiniteMonoid const&      m,
                                        UltraPseudometric const& d,
                                        Side                     side) {
    require_same_carrier(m, d.carrier_size());
    std::size_t const n = m.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t s = 0; s < n; ++s) {
          std::size_t const xs = side == Side::right ? m.product(x, s) : m.product(s, x);
          std::size_t const ys = side == Side::right ? m.product(y, s) : m.product(s, y);
          if (d(xs, ys) > d(x, y)) {
            return {false, std::array<std::size_t, 3>{x, y, s}};
          }
        }
      }
    }
    return {};
  }

  std::vector<std::size_t> identity_ball(FiniteMonoid const&      m,
                                         UltraPseudometric const& d,
                                         Rational const&          r) {
    require_same_carrier(m, d.carrier_size());
    return d.ball(m.identity(), r);
  }

  bool ball_submonoid_check(FiniteMonoid const&      m,
                            UltraPseudometric const& d,
                            Rational const&          r,
                            Side                     side) {
    if (!check_nonexpansive(m, d, side).holds) {
      throw PreconditionUnverified(
          std::string("metric is not ")
          + (side == Side::right ? "right" : "left") + " nonexpansive");
    }
    return is_submonoid(m, identity_ball(m, d, r));
  }

  namespace {
    bool is_congruence(FiniteMonoid const& m, Partition const& p, Side side) {
      require_same_carrier(m, p.carrier_size());
      std::size_t const n = m.size();
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = x + 1; y < n; ++y) {
          if (!p.related(x, y)) {
            continue;
          }
          for (std::size_t s = 0; s < n; ++s) {
            std::size_t const a = side == Side::left ? m.product(s, x) : m.product(x, s);
            std::size_t const b = side == Side::left ? m.product(s, y) : m.product(y, s);
            if (!p.related(a, b)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    struct UnionFind {
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        parent[std::max(x, y)] = std::min(x, y);
        return true;
      }
      std::vector<std::size_t> parent;
    };
  }  // namespace

  bool check_left_congruence(FiniteMonoid const& m, Partition const& p) {
    return is_congruence(m, p, Side::left);
  }

  bool check_right_congruence(FiniteMonoid const& m, Partition const& p) {
    return is_congruence(m, p, Side::right);
  }

  Partition congruence_closure(FiniteMonoid const& m,
                               Partition const&    p,
                               Side                side) {
    require_same_carrier(m, p.carrier_size());
    std::size_t const                                n = m.size();
    UnionFind                                        uf(n);
    std::vector<std::pair<std::size_t, std::size_t>> todo;
    for (auto const& cls : p.classes()) {
      for (std::size_t i = 1; i < cls.size(); ++i) {
        uf.unite(cls[0], cls[i]);
        todo.emplace_back(cls[0], cls[i]);
      }
    }
    // Translating every merged edge is enough: a chain of edges maps to a
    // chain of translated edges.
    while (!todo.empty()) {
      auto [x, y] = todo.back();
      todo.pop_back();
      for (std::size_t s = 0; s < n; ++s) {
        std::size_t const a = side == Side::left ? m.product(s, x) : m.product(x, s);
        std::size_t const b = side == Side::left ? m.product(s, y) : m.product(y, s);
        if (uf.unite(a, b)) {
          todo.emplace_back(a, b);
        }
      }
    }
    std::vector<std::size_t> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x] = uf.find(x);
    }
    return Partition(std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Lipschitz monoids
  ////////////////////////////////////////////////////////////////////////

  bool is_lipschitz(SelfMap const& f, UltraPseudometric const& d) {
    if (f.size() != d.carrier_size()) {
      throw DimensionMismatch("self-map and metric on different carriers");
    }
    for (std::size_t x = 0; x < f.size(); ++x) {
      for (std::size_t y = x + 1; y < f.size(); ++y) {
        if (d(f[x], f[y]) > d(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    void extend_lipschitz(UltraPseudometric const& d,
                          bool                     injective_only,
                          SelfMap&                 f,
                          std::vector<bool>&       used,
                          std::size_t              x,
                          std::vector<SelfMap>&    out) {
      std::size_t const n = d.carrier_size();
      if (x == n) {
        out.push_back(f);
        return;
      }
      for (Point v = 0; v < n; ++v) {
        if (injective_only && used[v]) {
          continue;
        }
        bool ok = true;
        for (std::size_t y = 0; y < x && ok; ++y) {
          ok = d(v, f[y]) <= d(x, y);
        }
        if (!ok) {
          continue;
        }
        f[x]    = v;
        used[v] = true;
        extend_lipschitz(d, injective_only, f, used, x + 1, out);
        used[v] = false;
      }
    }
  }  // namespace

  SelfMapMonoid enumerate_theta(UltraPseudometric const& d,
                                bool                     injective_only,
                                Limits const&            limits) {
    std::size_t const n = d.carrier_size();
    check_enum_bound("1-Lipschitz self-maps", power_ld(n, n), limits.max_enum);
    std::vector<SelfMap> out;
    SelfMap              f(n, 0);
    std::vector<bool>    used(n, false);
    extend_lipschitz(d, injective_only, f, used, 0, out);
    // Depth-first in increasing values already yields lexicographic order.
    return make_selfmap_monoid_unchecked(n, std::move(out));
  }

  Partition epsilon_A_relation(SelfMapMonoid const&      theta,
                               UltraPseudometric const&  d,
                               std::vector<Point> const& A,
                               Rational const&           eps) {
    if (A.empty()) {
      throw InvalidArgument("epsilon_A needs a nonempty point set");
    }
    if (eps <= 0) {
      throw InvalidArgument("epsilon must be positive");
    }
    if (theta.carrier_size() != d.carrier_size()) {
      throw CarrierMismatch("monoid and metric on different carriers");
    }
    for (Point a : A) {
      if (a >= d.carrier_size()) {
        throw InvalidArgument("point of A out of range");
      }
    }
    return Partition::from_relation(theta.size(), [&](std::size_t i, std::size_t j) {
      auto const& f1 = theta.element(i);
      auto const& f2 = theta.element(j);
      return std::all_of(A.begin(), A.end(),
                         [&](Point a) { return d(f1[a], f2[a]) < eps; });
    });
  }

}  // namespace stonework
