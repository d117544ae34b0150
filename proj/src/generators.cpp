#include "stonework/generators.hpp"

#include <algorithm>
#include <vector>

namespace stonework {

  namespace {
    std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    // Merges two random classes of p (no-op on an indiscrete partition).
    Partition merge_two_classes(Partition const& p, Rng& rng) {
      if (p.class_count() < 2) {
        return p;
      }
      std::size_t a = uniform(rng, 0, p.class_count() - 1);
      std::size_t b = uniform(rng, 0, p.class_count() - 2);
      if (b >= a) {
        ++b;
      }
      auto labels = p.labels();
      for (auto& l : labels) {
        if (l == b) {
          l = a;
        }
      }
      return Partition(std::move(labels));
    }
  }  // namespace

  SelfMap random_selfmap(std::size_t n, Rng& rng) {
    SelfMap f(n);
    for (auto& v : f) {
      v = static_cast<Point>(uniform(rng, 0, n - 1));
    }
    return f;
  }

  Partition random_partition(std::size_t n, Rng& rng) {
    std::vector<std::size_t> labels(n);
    for (auto& l : labels) {
      l = uniform(rng, 0, n - 1);
    }
    return Partition(std::move(labels));
  }

  MonotoneChain random_chain(std::size_t n, std::size_t length, Rng& rng) {
    std::vector<Partition> levels;
    if (length > 0) {
      levels.push_back(random_partition(n, rng));
      while (levels.size() < length) {
        Partition coarser = levels.back();
        std::size_t merges = uniform(rng, 0, 2);
        for (std::size_t i = 0; i < merges; ++i) {
          coarser = merge_two_classes(coarser, rng);
        }
        levels.push_back(std::move(coarser));
      }
      std::reverse(levels.begin(), levels.end());
    }
    return MonotoneChain(n, std::move(levels));
  }

  UltraPseudometric random_ultrametric(std::size_t n, Rng& rng, bool allow_zero) {
    static Rational const heights[] = {Rational(1, 8), Rational(1, 4), Rational(1, 3),
                                       Rational(1, 2), Rational(2, 3), Rational(1),
                                       Rational(3, 2), Rational(2)};
    std::vector<Rational> merge_heights(n > 0 ? n - 1 : 0);
    for (auto& h : merge_heights) {
      h = (allow_zero && uniform(rng, 0, 3) == 0) ? Rational(0)
                                                  : heights[uniform(rng, 0, 7)];
    }
    std::sort(merge_heights.begin(), merge_heights.end());

    std::vector<std::size_t> cluster(n);
    for (std::size_t x = 0; x < n; ++x) {
      cluster[x] = x;
    }
    DistanceMatrix d(n, std::vector<Rational>(n, Rational(0)));
    std::size_t    live = n;
    for (auto const& h : merge_heights) {
      std::vector<std::size_t> ids(cluster);
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      std::size_t a = ids[uniform(rng, 0, live - 1)];
      std::size_t b = a;
      while (b == a) {
        b = ids[uniform(rng, 0, live - 1)];
      }
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (cluster[x] == a && cluster[y] == b) {
            d[x][y] = d[y][x] = h;
          }
        }
      }
      for (auto& c : cluster) {
        if (c == b) {
          c = a;
        }
      }
      --live;
    }
    return UltraPseudometric(std::move(d));
  }

  FiniteMonoid random_small_monoid(std::size_t max_size, Rng& rng) {
    while (true) {
      std::size_t const    n = uniform(rng, 2, 3);
      std::vector<SelfMap> gens;
      std::size_t const    count = uniform(rng, 1, 2);
      for (std::size_t i = 0; i < count; ++i) {
        gens.push_back(random_selfmap(n, rng));
      }
      auto sm = generate_selfmap_monoid(n, gens);
      if (sm.size() > max_size) {
        continue;
      }
      auto m = sm.to_monoid();
      return uniform(rng, 0, 1) == 0 ? m : opposite(m);
    }
  }

  UltraPseudometric random_nonexpansive_metric(FiniteMonoid const& m, Side side, Rng& rng) {
    std::size_t const      length = uniform(rng, 1, 3);
    std::vector<Partition> levels;
    Partition              p = Partition::discrete(m.size());
    for (std::size_t i = 0; i < length; ++i) {
      std::size_t merges = uniform(rng, 0, 1 + (i == 0 ? 1 : 0));
      for (std::size_t j = 0; j < merges; ++j) {
        p = merge_two_classes(p, rng);
      }
      p = congruence_closure(m, p, side);
      levels.push_back(p);
    }
    std::reverse(levels.begin(), levels.end());
    ChainTail tail = uniform(rng, 0, 1) == 0 ? ChainTail::discrete : ChainTail::stabilized;
    return d_from_chain(MonotoneChain(m.size(), std::move(levels)), tail);
  }

  Cover random_cover(std::size_t n, Rng& rng) {
    std::size_t const     count = uniform(rng, 1, n + 1);
    std::vector<PointSet> blocks;
    PointSet const        all = (n == 64) ? ~PointSet{0} : ((PointSet{1} << n) - 1);
    for (std::size_t i = 0; i < count; ++i) {
      PointSet b = std::uniform_int_distribution<PointSet>(1, all)(rng);
      blocks.push_back(b);
    }
    PointSet uni = 0;
    for (auto b : blocks) {
      uni |= b;
    }
    // Uncovered points go to a random existing block.
    for (std::size_t x = 0; x < n; ++x) {
      if (((uni >> x) & 1U) == 0) {
        blocks[uniform(rng, 0, blocks.size() - 1)] |= PointSet{1} << x;
      }
    }
    return Cover(n, std::move(blocks));
  }

}  // namespace stonework
