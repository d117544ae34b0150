#include "stonework/suite.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include <json.hpp>

#include "stonework/boolring.hpp"
#include "stonework/contrast.hpp"
#include "stonework/duality.hpp"
#include "stonework/error.hpp"
#include "stonework/finmon.hpp"
#include "stonework/generators.hpp"
#include "stonework/json_io.hpp"
#include "stonework/navector.hpp"
#include "stonework/ultra.hpp"
#include "stonework/unif.hpp"

namespace stonework {

  namespace {
    using json = nlohmann::json;

    // Counts instances and keeps the first failure.
    class Tally {
     public:
      Tally(std::string name, std::string params)
          : _start(std::chrono::steady_clock::now()) {
        _report.check_name          = std::move(name);
        _report.instance_parameters = std::move(params);
      }

      template <typename Witness>
      void expect(bool ok, Witness&& witness) {
        ++_report.instances_checked;
        if (!ok && _report.passed) {
          _report.passed  = false;
          _report.witness = json(witness()).dump();
        }
      }

      void fail(std::string const& why) {
        if (_report.passed) {
          _report.passed  = false;
          _report.witness = json({{"error", why}}).dump();
        }
      }

      bool ok() const {
        return _report.passed;
      }

      VerificationReport finish() {
        auto end            = std::chrono::steady_clock::now();
        _report.elapsed_ms  = std::chrono::duration<double, std::milli>(end - _start).count();
        return std::move(_report);
      }

     private:
      VerificationReport                    _report;
      std::chrono::steady_clock::time_point _start;
    };

    // Runs body against a tally, turning escaped exceptions into failures.
    template <typename Body>
    VerificationReport run_check(std::string name, std::string params, Body&& body) {
      Tally t(std::move(name), std::move(params));
      try {
        body(t);
      } catch (std::exception const& e) {
        t.fail(e.what());
      }
      return t.finish();
    }

    std::string up_to(char const* what, std::size_t n) {
      return std::string(what) + "<=" + std::to_string(n);
    }

    std::vector<Rational> radii_of(UltraPseudometric const& d) {
      auto r = d.distinct_values();
      r.push_back(d.diameter() + 1);
      r.erase(std::remove(r.begin(), r.end(), Rational(0)), r.end());
      return r;
    }

    std::vector<std::vector<Point>> nonempty_subsets(std::size_t n) {
      std::vector<std::vector<Point>> out;
      for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Point> A;
        for (std::size_t x = 0; x < n; ++x) {
          if ((mask >> x) & 1U) {
            A.push_back(static_cast<Point>(x));
          }
        }
        out.push_back(std::move(A));
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////
    // duality
    ////////////////////////////////////////////////////////////////////

    VerificationReport check_counts(std::size_t points, Limits const& lim) {
      return run_check("duality.counts", up_to("points", points), [&](Tally& t) {
        for (std::size_t n = 1; n <= points; ++n) {
          auto maps   = full_selfmap_monoid(n, lim);
          auto endos  = enumerate_ring_endos(BoolRing(n), lim);
          auto expect = static_cast<std::size_t>(power_ld(n, n));
          t.expect(maps.size() == expect && endos.size() == expect, [&] {
            return json{{"n", n}, {"selfmaps", maps.size()}, {"ring_endos", endos.size()}};
          });
        }
      });
    }

    VerificationReport check_phi(std::size_t points, Limits const& lim) {
      return run_check("duality.phi_anti_isomorphism", up_to("points", points), [&](Tally& t) {
        for (std::size_t n = 1; n <= points; ++n) {
          BoolRing const ring(n);
          auto           maps  = full_selfmap_monoid(n, lim);
          auto           endos = enumerate_ring_endos(ring, lim);
          std::vector<RingEndo> images;
          for (auto const& s : maps.elements()) {
            images.push_back(phi(s, ring));
            t.expect(phi_inverse(images.back()) == s,
                     [&] { return json{{"check", "phi_inverse"}, {"s", s}}; });
          }
          auto sorted = images;
          std::sort(sorted.begin(), sorted.end());
          t.expect(sorted == endos, [&] { return json{{"check", "phi_onto"}, {"n", n}}; });
          for (std::size_t i = 0; i < maps.size(); ++i) {
            for (std::size_t j = 0; j < maps.size(); ++j) {
              auto const& s = maps.element(i);
              auto const& u = maps.element(j);
              t.expect(phi(compose(s, u), ring) == compose(images[j], images[i]), [&] {
                return json{{"check", "anti_law"}, {"s", s}, {"t", u}};
              });
            }
          }
        }
      });
    }

    VerificationReport check_delta_full(std::size_t atoms, Limits const& lim) {
      return run_check("duality.delta_anti_isomorphism", up_to("atoms", atoms), [&](Tally& t) {
        for (std::size_t n = 1; n <= atoms; ++n) {
          BoolRing const ring(n);
          auto           all = enumerate_group_endos(ring, lim);
          std::vector<GroupEndo> dual;
          dual.reserve(all.size());
          for (auto const& sigma : all) {
            dual.push_back(delta_adjoint(sigma));
            t.expect(dual.back() == sigma.transpose() && delta_adjoint(dual.back()) == sigma,
                     [&] { return json{{"check", "transpose"}, {"sigma", json_io::to_json(sigma)}}; });
          }
          auto sorted = dual;
          std::sort(sorted.begin(), sorted.end());
          t.expect(sorted == all, [&] { return json{{"check", "delta_bijective"}, {"n", n}}; });
          for (std::size_t i = 0; i < all.size(); ++i) {
            for (std::size_t j = 0; j < all.size(); ++j) {
              bool ok = delta_adjoint(compose(all[i], all[j])) == compose(dual[j], dual[i]);
              t.expect(ok, [&] {
                return json{{"check", "anti_law"},
                            {"sigma", json_io::to_json(all[i])},
                            {"tau", json_io::to_json(all[j])}};
              });
            }
          }
        }
      });
    }

    VerificationReport check_delta_on_phi(std::size_t points, Limits const& lim) {
      return run_check("duality.delta_on_phi_image", up_to("points", points), [&](Tally& t) {
        for (std::size_t n = 1; n <= points; ++n) {
          BoolRing const         ring(n);
          auto                   maps = full_selfmap_monoid(n, lim);
          std::vector<GroupEndo> phis, hs;
          for (auto const& s : maps.elements()) {
            phis.push_back(phi(s, ring).as_group_endo());
            hs.push_back(delta_adjoint(phis.back()));
          }
          std::set<std::vector<std::uint32_t>> distinct;
          for (auto const& h : hs) {
            distinct.insert(h.rows());
          }
          t.expect(distinct.size() == hs.size(), [&] { return json{{"check", "h_injective"}, {"n", n}}; });
          for (std::size_t i = 0; i < maps.size(); ++i) {
            for (std::size_t j = 0; j < maps.size(); ++j) {
              bool anti = delta_adjoint(compose(phis[j], phis[i])) == compose(hs[i], hs[j]);
              bool hom  = h_embed(compose(maps.element(i), maps.element(j)), ring)
                         == compose(hs[i], hs[j]);
              t.expect(anti && hom, [&] {
                return json{{"s", maps.element(i)}, {"t", maps.element(j)}};
              });
            }
          }
        }
      });
    }

    VerificationReport check_delta_eval(std::size_t points, Limits const& lim) {
      return run_check("duality.delta_eval", up_to("points", points), [&](Tally& t) {
        for (std::size_t n = 1; n <= points; ++n) {
          BoolRing const                     ring(n);
          std::vector<DualGroup::Functional> image;
          for (Point y = 0; y < n; ++y) {
            image.push_back(delta_eval(y, ring));
          }
          auto sorted = image;
          std::sort(sorted.begin(), sorted.end());
          bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
          t.expect(injective && sorted == ring_homs_to_Z2(ring) && image.size() == n,
                   [&] { return json{{"check", "image"}, {"n", n}}; });
          auto const maps = full_selfmap_monoid(n, lim);
          for (auto const& s : maps.elements()) {
            auto h = h_embed(s, ring);
            for (Point y = 0; y < n; ++y) {
              t.expect(h.apply(delta_eval(y, ring)) == delta_eval(s[y], ring),
                       [&] { return json{{"check", "equivariance"}, {"s", s}, {"y", y}}; });
            }
          }
        }
      });
    }

    VerificationReport check_entourages(std::size_t points, Limits const& lim) {
      std::size_t const top = std::min<std::size_t>(points, 3);
      return run_check("duality.entourage_transport", up_to("points", top), [&](Tally& t) {
        for (std::size_t n = 1; n <= top; ++n) {
          BoolRing const ring(n);
          auto           maps = full_selfmap_monoid(n, lim);
          for (BoolRing::Element chi = 0; chi < ring.size(); ++chi) {
            for (auto const& s1 : maps.elements()) {
              for (auto const& s2 : maps.elements()) {
                t.expect(entourage_transport(chi, s1, s2).consistent(), [&] {
                  return json{{"chi", to_bitstring(chi, n)}, {"s1", s1}, {"s2", s2}};
                });
              }
            }
            for (auto side : {EntourageSide::preimage, EntourageSide::ring_image,
                              EntourageSide::dual_action}) {
              // Throws NotAnEquivalence on failure.
              entourage_partition(chi, maps, side);
            }
          }
        }
      });
    }

    VerificationReport check_cayley(Rng& rng, Limits const& lim) {
      return run_check("finmon.cayley_embedding", "20 random monoids + T_n, n<=3", [&](Tally& t) {
        std::vector<FiniteMonoid> monoids;
        for (std::size_t n = 1; n <= 3; ++n) {
          monoids.push_back(full_selfmap_monoid(n, lim).to_monoid(lim));
        }
        for (int i = 0; i < 20; ++i) {
          monoids.push_back(random_small_monoid(6, rng));
        }
        for (auto const& m : monoids) {
          auto emb = cayley_embed(m);
          std::set<std::size_t> distinct(emb.element_to_map.begin(), emb.element_to_map.end());
          t.expect(distinct.size() == m.size() && opposite(opposite(m)) == m,
                   [&] { return json{{"monoid", json_io::to_json(m)}}; });
          for (std::size_t s = 0; s < m.size(); ++s) {
            for (std::size_t u = 0; u < m.size(); ++u) {
              t.expect(emb.element_to_map[m.product(s, u)]
                           == emb.image.product(emb.element_to_map[s], emb.element_to_map[u]),
                       [&] { return json{{"monoid", json_io::to_json(m)}, {"s", s}, {"t", u}}; });
            }
          }
        }
      });
    }

    ////////////////////////////////////////////////////////////////////
    // ultra
    ////////////////////////////////////////////////////////////////////

    VerificationReport check_metrization(Rng& rng) {
      return run_check("ultra.metrization", "200 random chains, <=6 points", [&](Tally& t) {
        std::uniform_int_distribution<std::size_t> pts(1, 6), len(0, 3);
        for (int i = 0; i < 200; ++i) {
          auto chain = random_chain(pts(rng), len(rng), rng);
          for (auto tail : {ChainTail::discrete, ChainTail::stabilized}) {
            auto d  = d_from_chain(chain, tail);
            bool ok = satisfies_strong_triangle(d.matrix())
                      && subdominant_ultrametric(d.matrix()) == d;
            for (std::size_t lvl = 0; lvl < chain.length(); ++lvl) {
              auto ball = d.ball_partition(dyadic(static_cast<unsigned>(lvl)));
              ok        = ok && chain.level(lvl + 1).refines(ball) && ball.refines(chain.level(lvl));
            }
            t.expect(ok, [&] { return json_io::to_json(chain, tail); });
          }
        }
      });
    }

    VerificationReport check_sup_combine(Rng& rng) {
      return run_check("ultra.sup_combine", "100 triples of chain metrics, <=5 points", [&](Tally& t) {
        std::uniform_int_distribution<std::size_t> pts(1, 5), len(0, 3);
        for (int i = 0; i < 100; ++i) {
          std::size_t const              n = pts(rng);
          std::vector<UltraPseudometric> ds;
          for (int j = 0; j < 3; ++j) {
            ds.push_back(d_from_chain(random_chain(n, len(rng), rng)));
          }
          auto sup = sup_combine(ds, Rational(1));
          t.expect(satisfies_strong_triangle(sup.matrix()),
                   [&] { return json_io::to_json(sup); });
        }
      });
    }

    VerificationReport check_theta(std::size_t points, Rng& rng, Limits const& lim) {
      return run_check("ultra.theta", "discrete <=" + std::to_string(points)
                                          + "; 50 random ultrametrics <=4 points",
                       [&](Tally& t) {
        for (std::size_t n = 1; n <= points; ++n) {
          t.expect(enumerate_theta(UltraPseudometric::discrete(n), false, lim)
                       == full_selfmap_monoid(n, lim),
                   [&] { return json{{"check", "theta_discrete"}, {"n", n}}; });
        }
        std::uniform_int_distribution<std::size_t> pts(1, 4);
        for (int i = 0; i < 50; ++i) {
          auto d     = random_ultrametric(pts(rng), rng, i % 3 == 0);
          auto theta = enumerate_theta(d, false, lim);
          bool ok    = theta.contains(identity_map(d.carrier_size()));
          for (auto const& f : theta.elements()) {
            ok = ok && is_lipschitz(f, d);
            for (auto const& g : theta.elements()) {
              ok = ok && theta.contains(compose(f, g));
            }
          }
          std::size_t brute = 0;
          auto const  all   = full_selfmap_monoid(d.carrier_size(), lim);
          for (auto const& f : all.elements()) {
            brute += is_lipschitz(f, d) ? 1 : 0;
          }
          t.expect(ok && brute == theta.size(), [&] { return json_io::to_json(d); });
        }
      });
    }

    VerificationReport check_epsilon(Rng& rng, Limits const& lim) {
      return run_check("ultra.epsilon_A", "20 random ultrametrics <=4 points; saturation law on 3 points",
                       [&](Tally& t) {
        std::uniform_int_distribution<std::size_t> pts(1, 4);
        for (int i = 0; i < 20; ++i) {
          auto d     = random_ultrametric(pts(rng), rng, i % 2 == 0);
          auto theta = enumerate_theta(d, false, lim);
          for (auto const& A : nonempty_subsets(d.carrier_size())) {
            for (auto const& eps : radii_of(d)) {
              epsilon_A_relation(theta, d, A, eps);  // throws unless an equivalence
              t.expect(true, [] { return json(); });
            }
          }
        }
        std::vector<UltraPseudometric> metrics{UltraPseudometric::discrete(3)};
        for (int i = 0; i < 4; ++i) {
          metrics.push_back(random_ultrametric(3, rng, i % 2 == 1));
        }
        for (auto const& d : metrics) {
          auto theta = enumerate_theta(d, false, lim);
          for (auto const& s0 : theta.elements()) {
            for (auto const& A : nonempty_subsets(3)) {
              std::vector<Point> s0A;
              for (Point a : A) {
                s0A.push_back(s0[a]);
              }
              for (auto const& eps : radii_of(d)) {
                auto rel_s0A = epsilon_A_relation(theta, d, s0A, eps);
                auto rel_A   = epsilon_A_relation(theta, d, A, eps);
                for (std::size_t i1 = 0; i1 < theta.size(); ++i1) {
                  for (std::size_t i2 = 0; i2 < theta.size(); ++i2) {
                    if (!rel_s0A.related(i1, i2)) {
                      continue;
                    }
                    auto j1 = *theta.index_of(compose(theta.element(i1), s0));
                    auto j2 = *theta.index_of(compose(theta.element(i2), s0));
                    t.expect(rel_A.related(j1, j2), [&] {
                      return json{{"metric", json_io::to_json(d)}, {"s0", s0}, {"A", A},
                                  {"f1", theta.element(i1)}, {"f2", theta.element(i2)}};
                    });
                  }
                }
              }
            }
          }
        }
      });
    }

    VerificationReport check_balls(Rng& rng) {
      return run_check("ultra.ball_submonoid", "100 random monoids <=6 with right-nonexpansive metrics",
                       [&](Tally& t) {
        for (int i = 0; i < 100; ++i) {
          auto m = random_small_monoid(6, rng);
          auto d = random_nonexpansive_metric(m, Side::right, rng);
          t.expect(check_nonexpansive(m, d, Side::right).holds,
                   [&] { return json{{"check", "generator"}, {"monoid", json_io::to_json(m)}}; });
          for (auto const& r : radii_of(d)) {
            t.expect(ball_submonoid_check(m, d, r, Side::right), [&] {
              return json{{"monoid", json_io::to_json(m)}, {"metric", json_io::to_json(d)},
                          {"r", to_string(r)}};
            });
          }
        }
      });
    }

    VerificationReport check_congruences(Rng& rng) {
      return run_check("ultra.ball_congruence", "100 random monoids <=6 with left-nonexpansive metrics",
                       [&](Tally& t) {
        for (int i = 0; i < 100; ++i) {
          auto m = random_small_monoid(6, rng);
          auto d = random_nonexpansive_metric(m, Side::left, rng);
          t.expect(check_nonexpansive(m, d, Side::left).holds,
                   [&] { return json{{"check", "generator"}, {"monoid", json_io::to_json(m)}}; });
          for (auto const& r : radii_of(d)) {
            t.expect(check_left_congruence(m, d.ball_partition(r)), [&] {
              return json{{"monoid", json_io::to_json(m)}, {"metric", json_io::to_json(d)},
                          {"r", to_string(r)}};
            });
          }
        }
      });
    }

    ////////////////////////////////////////////////////////////////////
    // unif
    ////////////////////////////////////////////////////////////////////

    std::vector<SelfMapMonoid> three_element_monoids_on_3_points() {
      auto                       all = full_selfmap_monoid(3);
      auto                       id  = identity_map(3);
      std::vector<SelfMapMonoid> out;
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          if (all.element(i) == id || all.element(j) == id) {
            continue;
          }
          try {
            out.push_back(SelfMapMonoid::from_elements(3, {id, all.element(i), all.element(j)}));
          } catch (InvalidArgument const&) {
          }
        }
      }
      return out;
    }

    std::vector<Partition> all_partitions(std::size_t n) {
      std::set<Partition>      seen;
      std::vector<std::size_t> labels(n, 0);
      // Every labelling with values < n; normalization removes repeats.
      while (true) {
        seen.insert(Partition(labels));
        std::size_t pos = n;
        while (pos > 0) {
          --pos;
          if (++labels[pos] < n) {
            break;
          }
          labels[pos] = 0;
          if (pos == 0) {
            return {seen.begin(), seen.end()};
          }
        }
      }
    }

    VerificationReport check_saturation(Rng& rng, Limits const& lim) {
      return run_check("unif.saturation", "all 3-element monoids on 3 points; 30 random actions",
                       [&](Tally& t) {
        auto parts = all_partitions(3);
        for (auto const& sm : three_element_monoids_on_3_points()) {
          auto action = MonoidAction::natural(sm, lim);
          for (std::size_t s = 0; s < sm.size(); ++s) {
            for (std::size_t u = 0; u < sm.size(); ++u) {
              for (auto const& eps : parts) {
                auto const& fs = sm.element(s);
                auto const& ft = sm.element(u);
                t.expect(preimage_partition(ft, preimage_partition(fs, eps))
                             == preimage_partition(compose(fs, ft), eps),
                         [&] { return json{{"s", fs}, {"t", ft}, {"eps", json_io::to_json(eps)}}; });
              }
            }
          }
        }
        for (int i = 0; i < 30; ++i) {
          std::size_t const n = 2 + static_cast<std::size_t>(i % 3);
          std::vector<SelfMap> gens{random_selfmap(n, rng), random_selfmap(n, rng)};
          auto sm = generate_selfmap_monoid(n, gens, lim);
          if (sm.size() > 40) {
            continue;
          }
          auto            action = MonoidAction::natural(sm, lim);
          PartitionFamily gamma(n, {random_partition(n, rng), random_partition(n, rng)});
          auto            sat   = saturate(action, gamma, lim);
          auto const&     fam   = sat.family;
          bool            ok    = fam.is_meet_closed() && fam.is_saturated_under(action);
          for (auto const& g : gamma.members()) {
            ok = ok && fam.contains(g);
          }
          ok = ok && saturate(action, fam, lim).family == fam;
          t.expect(ok, [&] {
            return json{{"action", json_io::to_json(action)}, {"gamma", json_io::to_json(gamma)}};
          });
        }
      });
    }

    VerificationReport check_preimages(Rng& rng) {
      return run_check("unif.preimage_and_kernels", "200 random (s, p) on <=6 points", [&](Tally& t) {
        std::uniform_int_distribution<std::size_t> pts(1, 6);
        for (int i = 0; i < 200; ++i) {
          std::size_t const n = pts(rng);
          auto              s = random_selfmap(n, rng);
          auto              p = random_partition(n, rng);
          auto rel = Partition::from_relation(n, [&](std::size_t x, std::size_t y) {
            return p.related(s[x], s[y]);
          });
          t.expect(rel == preimage_partition(s, p),
                   [&] { return json{{"s", s}, {"p", json_io::to_json(p)}}; });
        }
        for (std::size_t n = 1; n <= 6; ++n) {
          std::vector<Partition> kernels;
          for (std::size_t x = 0; x < n; ++x) {
            std::vector<int> f(n, 0);
            f[x] = 1;
            kernels.push_back(kernel_partition(f));
          }
          t.expect(meet_all(n, kernels).is_discrete(), [&] { return json{{"n", n}}; });
        }
      });
    }

    VerificationReport check_covers(Rng& rng) {
      return run_check("unif.cover_combinators", "500 random cover pairs, <=6 points", [&](Tally& t) {
        std::uniform_int_distribution<std::size_t> pts(1, 6);
        for (int i = 0; i < 500; ++i) {
          std::size_t const n = pts(rng);
          auto              P = random_cover(n, rng);
          auto              Q = random_cover(n, rng);
          auto              W = cover_wedge(P, Q);
          auto              partition = Cover::from_partition(random_partition(n, rng));
          bool ok = refines(P, cover_star(P)) && refines(W, P) && refines(W, Q)
                    && cover_order(W) <= cover_order(P) * cover_order(Q)
                    && cover_order(partition) == 1;
          t.expect(ok, [&] { return json{{"P", json_io::to_json(P)}, {"Q", json_io::to_json(Q)}}; });
        }
      });
    }

    ////////////////////////////////////////////////////////////////////
    // contrast example
    ////////////////////////////////////////////////////////////////////

    VerificationReport check_contrast(std::size_t bound_k, Limits const& lim) {
      return run_check("contrast.certificate", up_to("k", bound_k), [&](Tally& t) {
        for (std::size_t k = 1; k <= bound_k; ++k) {
          ContrastMonoid s(k, lim);
          auto           cert = rna_certificate(s);
          t.expect(cert.passed(), [&] { return json_io::to_json(cert); });
        }
      });
    }

    VerificationReport check_contrast_asymmetry(std::size_t bound_k, Limits const& lim) {
      return run_check("contrast.right_counterexample", up_to("k", bound_k), [&](Tally& t) {
        bool        found = false;
        std::string witness;
        for (std::size_t k = 1; k <= bound_k && !found; ++k) {
          ContrastMonoid s(k, lim);
          auto           r = check_nonexpansive(s.monoid(), s.metric(), Side::right);
          if (!r.holds) {
            found = true;
          }
        }
        t.expect(found, [] { return json{{"error", "right nonexpansiveness never fails"}}; });
      });
    }

    VerificationReport check_obstruction(std::size_t bound_k, Limits const& lim) {
      return run_check("contrast.obstruction", up_to("k", bound_k), [&](Tally& t) {
        for (std::size_t k = 1; k <= bound_k; ++k) {
          ContrastMonoid s(k, lim);
          for (std::size_t j = 0; j < k; ++j) {
            auto w  = obstruction_witness(s, j);
            bool ok = s.monoid().product(w.u, s.number_index(w.n)) == s.number_index(0);
            for (std::size_t c = 1; c <= j; ++c) {
              ok = ok && s.coordinate(w.u, c);
            }
            t.expect(ok, [&] { return json_io::to_json(w, s); });
          }
          bool none = false;
          try {
            obstruction_witness(s, k);
          } catch (NoWitness const&) {
            none = true;
          }
          t.expect(none, [&] { return json{{"k", k}, {"j", k}, {"error", "unexpected witness"}}; });
        }
      });
    }

    ////////////////////////////////////////////////////////////////////
    // navector
    ////////////////////////////////////////////////////////////////////

    VerificationReport check_navector(Rng& rng, Limits const& lim) {
      return run_check("navector.kantorovich", "15 random ultrametrics <=4 points", [&](Tally& t) {
        std::uniform_int_distribution<std::size_t> pts(1, 4);
        for (int i = 0; i < 15; ++i) {
          std::size_t const n = (i < 5) ? 3 : pts(rng);
          KantorovichSpace  space(random_ultrametric(n, rng, i % 4 == 0));
          auto const&       d    = space.base();
          std::size_t const vecs = std::size_t{1} << n;
          std::vector<Rational> norm(vecs);
          for (std::size_t v = 0; v < vecs; ++v) {
            norm[v] = kantorovich_norm(space, FreeVector(v), lim).value;
          }
          for (std::size_t x = 0; x < n; ++x) {
            t.expect(norm[std::size_t{1} << x] == 1, [&] { return json{{"x", x}}; });
            for (std::size_t y = x + 1; y < n; ++y) {
              t.expect(norm[(std::size_t{1} << x) | (std::size_t{1} << y)] == d(x, y),
                       [&] { return json{{"metric", json_io::to_json(d)}, {"x", x}, {"y", y}}; });
            }
          }
          for (std::size_t u = 0; u < vecs; ++u) {
            for (std::size_t v = 0; v < vecs; ++v) {
              t.expect(norm[u ^ v] <= std::max(norm[u], norm[v]), [&] {
                return json{{"metric", json_io::to_json(d)}, {"u", u}, {"v", v}};
              });
            }
          }
          auto theta = enumerate_theta(d, false, lim);
          for (auto const& f : theta.elements()) {
            for (std::size_t v = 0; v < vecs; ++v) {
              auto fv = lipschitz_linear_extend(space, f, FreeVector(v));
              t.expect(norm[fv.support()] <= norm[v], [&] {
                return json{{"metric", json_io::to_json(d)}, {"f", f}, {"v", v}};
              });
            }
          }
        }
      });
    }

    std::vector<VerificationReport> duality_reports(std::size_t points, std::size_t atoms,
                                                    Limits const& lim) {
      std::vector<VerificationReport> out;
      out.push_back(check_counts(points, lim));
      out.push_back(check_phi(points, lim));
      out.push_back(check_delta_full(atoms, lim));
      out.push_back(check_delta_on_phi(points, lim));
      out.push_back(check_delta_eval(points, lim));
      out.push_back(check_entourages(points, lim));
      return out;
    }
  }  // namespace

  void SuiteConfig::validate() const {
    if (bound_points < 1 || bound_points > 5) {
      throw ConfigError("--bound-points must lie in [1, 5]");
    }
    if (bound_atoms < 1 || bound_atoms > 4) {
      throw ConfigError("--bound-atoms must lie in [1, 4]");
    }
    if (bound_k < 1 || bound_k > 7) {
      throw ConfigError("--bound-k must lie in [1, 7]");
    }
  }

  std::vector<VerificationReport> run_duality_suite(std::size_t   points,
                                                    std::size_t   atoms,
                                                    Limits const& limits) {
    return duality_reports(points, atoms, limits);
  }

  std::vector<VerificationReport> run_suite(SuiteConfig const& config) {
    config.validate();
    Limits const& lim = config.limits;
    Rng           rng(config.seed);
    auto          out = duality_reports(config.bound_points, config.bound_atoms, lim);
    out.push_back(check_cayley(rng, lim));
    out.push_back(check_metrization(rng));
    out.push_back(check_sup_combine(rng));
    out.push_back(check_theta(config.bound_points, rng, lim));
    out.push_back(check_epsilon(rng, lim));
    out.push_back(check_balls(rng));
    out.push_back(check_congruences(rng));
    out.push_back(check_saturation(rng, lim));
    out.push_back(check_preimages(rng));
    out.push_back(check_covers(rng));
    out.push_back(check_contrast(config.bound_k, lim));
    out.push_back(check_contrast_asymmetry(config.bound_k, lim));
    out.push_back(check_obstruction(config.bound_k, lim));
    out.push_back(check_navector(rng, lim));
    if (config.self_test) {
      out.push_back(run_self_test());
    }
    return out;
  }

  VerificationReport run_self_test() {
    // e = 0; a*a = b but a*b = a and b*b = a, so (aa)b = a != b = a(ab).
    FiniteMonoid::Table const corrupted{{0, 1, 2}, {1, 2, 1}, {2, 2, 1}};
    return run_check("self_test.corrupted_monoid", "3-element table, identity 0", [&](Tally& t) {
      try {
        validate_monoid(corrupted, 0);
        t.expect(true, [] { return json(); });
      } catch (AssociativityViolation const& e) {
        t.expect(false, [&] {
          return json{{"monoid", {{"size", 3}, {"identity", 0}, {"table", corrupted}}},
                      {"triple", e.witness}};
        });
      }
    });
  }

  bool all_passed(std::vector<VerificationReport> const& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](auto const& r) { return r.passed; });
  }

  std::string reports_to_tsv(std::vector<VerificationReport> const& reports) {
    std::ostringstream os;
    os << "check\tparameters\tinstances\toutcome\telapsed_ms\twitness\n";
    for (auto const& r : reports) {
      os << r.check_name << '\t' << r.instance_parameters << '\t' << r.instances_checked << '\t'
         << (r.passed ? "pass" : "fail") << '\t' << static_cast<long long>(r.elapsed_ms) << '\t'
         << r.witness << '\n';
    }
    return os.str();
  }

  std::string reports_to_json(std::vector<VerificationReport> const& reports) {
    json arr = json::array();
    for (auto const& r : reports) {
      json o = {{"check", r.check_name},
                {"parameters", r.instance_parameters},
                {"instances", r.instances_checked},
                {"outcome", r.passed ? "pass" : "fail"},
                {"elapsed_ms", r.elapsed_ms}};
      if (!r.passed) {
        o["witness"] = json::parse(r.witness);
      }
      arr.push_back(std::move(o));
    }
    return json({{"reports", arr}, {"passed", all_passed(reports)}}).dump(2);
  }

}  // namespace stonework
