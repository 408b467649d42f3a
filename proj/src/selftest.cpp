#include "weakgen/selftest.hpp"

#include <algorithm>

#include "weakgen/finite.hpp"
#include "weakgen/model.hpp"
#include "weakgen/sampling.hpp"

namespace weakgen {

  namespace {
    struct Ctx {
      GenStore      store{Alphabet::from_list("x,y")};
      Model         model{store};
      unsigned      h;   // requested max height
      unsigned      hm;  // mountains and skeletons
      unsigned      hs;  // exhaustive small checks
      std::uint64_t seed;
    };

    struct Check {
      PropertyResult& r;

      void operator()(bool ok, std::string const& what) {
        ++r.checked;
        if (!ok) {
          if (r.failed++ == 0) {
            r.note = what;
          }
        }
      }
      void unknown() {
        ++r.checked;
        ++r.unknown;
      }
    };

    Token letter_token(GenId g) {
      return g == kUnit ? Token::anchor(Anchor::one()) : Token::gen(g);
    }

    Word cat(std::initializer_list<Word> parts) {
      Word out;
      for (auto const& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
      }
      return out;
    }

    std::vector<Mountain> all_mountains(Ctx& c, unsigned max_h) {
      std::vector<Mountain> out{Mountain{}};
      for (GenId g : enumerate_up_to(c.store, max_h)) {
        auto const& ms = c.model.mountains_with_peak(g);
        out.insert(out.end(), ms.begin(), ms.end());
      }
      return out;
    }

    void counting(Ctx& c, Check& check) {
      std::size_t const n = c.store.alphabet().size();
      for (unsigned i = 1; i <= c.h; ++i) {
        auto e = enumerate(c.store, i, KindFilter::E).size();
        check(e == (std::size_t(1) << (i - 1)) * n,
              "|G_" + std::to_string(i) + ",e| = " + std::to_string(e));
      }
      if (c.h >= 2) {
        auto d = enumerate(c.store, 2, KindFilter::D).size();
        check(d == 4 * n * (n - 1), "|G_2,d| = " + std::to_string(d));
      }
      for (GenId g : enumerate_up_to(c.store, c.hm)) {
        auto h = c.store.height(g);
        check(enumerate_uphills(c.store, g).size() == std::size_t(1) << h,
              "uphills of " + serialize(c.store, g));
        check(enumerate_mountains(c.store, g).size() == std::size_t(1) << 2 * h,
              "mountains of " + serialize(c.store, g));
      }
    }

    void rho_soundness(Ctx& c, Check& check) {
      for (auto const& p : relations(c.store, c.h)) {
        check(beta(c.store, p.lhs) == beta(c.store, p.rhs),
              std::string(to_string(p.kind)) + " for "
                  + serialize(c.store, p.lhs));
      }
    }

    void uplift_soundness(Ctx& c, Check& check) {
      Sampler s(c.store, c.hm);
      Rng     rng(c.seed);
      for (int k = 0; k < 200; ++k) {
        Landscape u  = s.random_mountain_range(rng, 4);
        auto      rs = rivers(c.store, u);
        if (rs.empty()) {
          continue;
        }
        std::size_t i = rs[rng() % rs.size()];
        Landscape   v = uplift_at(c.store, u, i);
        check(equivalent(c.store, u.as_word(), v.as_word()),
              serialize(c.store, u));
      }
    }

    void confluence(Ctx& c, Check& check) {
      Sampler s(c.store, std::min(c.h, 4u));
      Rng     rng(c.seed);
      for (int k = 0; k < 200; ++k) {
        Landscape u  = s.random_mountain_range(rng, 4);
        Landscape nf = beta2(c.store, u);
        for (int t = 0; t < 10; ++t) {
          check(reduce_randomly(c.store, u, rng) == nf, serialize(c.store, u));
        }
      }
    }

    void termination(Ctx& c, Check& check) {
      Sampler s(c.store, c.hm);
      Rng     rng(c.seed);
      for (int k = 0; k < 100; ++k) {
        Landscape u = s.random_mountain_range(rng, 5);
        for (auto rs = rivers(c.store, u); !rs.empty();
             rs       = rivers(c.store, u)) {
          std::size_t i = rs[rng() % rs.size()];
          UpliftStep  step;
          Landscape   v = uplift_at(c.store, u, i, &step);
          if (step.mode == UpliftMode::Collapse) {
            check(v.length() + 4 == u.length(), "collapse length");
          } else {
            check(v.length() == u.length()
                      && c.store.height(v.letters[i])
                             == c.store.height(u.letters[i]) + 2,
                  "replace height");
          }
          u = std::move(v);
        }
      }
    }

    void generator_products(Ctx& c, Check& check) {
      auto& st = c.store;
      for (unsigned h = 2; h <= c.hm; ++h) {
        for (GenId g : enumerate(st, h, KindFilter::All)) {
          std::string const name = serialize(st, g);
          Word const w  = {Token::gen(g)};
          Word const gc = {letter_token(st.middle(g))};
          Word const gl = gL_word(st, g);
          Word const gr = gR_word(st, g);
          Landscape const bg = beta(st, w);
          check(beta(st, cat({gc, w})) == bg, "g^c g for " + name);
          check(beta(st, cat({w, gc})) == bg, "g g^c for " + name);
          for (Word const& p : {cat({w, gl}), cat({w, gr}), cat({gl, w}),
                                cat({gr, w})}) {
            check(c.model.is_idempotent(Mountain::of_word(st, p)),
                  "idempotent product for " + name);
          }
          check(beta(st, cat({gl, gc, gl})) == beta(st, gl),
                "g^L g^c g^L for " + name);
          check(beta(st, cat({gr, w, gl})) == beta(st, cat({gr, gc, gl})),
                "g^R g g^L for " + name);
        }
      }
    }

    void associativity(Ctx& c, Check& check) {
      Sampler s(c.store, c.hm);
      Rng     rng(c.seed);
      for (int k = 0; k < 500; ++k) {
        Mountain u = c.model.mountain(s.random_mountain(rng));
        Mountain v = c.model.mountain(s.random_mountain(rng));
        Mountain w = c.model.mountain(s.random_mountain(rng));
        check(c.model.mul(c.model.mul(u, v), w)
                  == c.model.mul(u, c.model.mul(v, w)),
              c.model.serialize(u));
      }
    }

    bool prefix_of(Landscape const& p, Landscape const& u) {
      return p.letters.size() <= u.letters.size()
             && std::equal(p.letters.begin(), p.letters.end(), u.letters.begin())
             && std::equal(p.anchors.begin(), p.anchors.end(), u.anchors.begin());
    }

    void model_hills(Ctx& c, Check& check) {
      Sampler s(c.store, c.hm);
      Rng     rng(c.seed);
      for (int k = 0; k < 300; ++k) {
        Mountain u  = c.model.mountain(s.random_mountain(rng));
        Mountain v  = c.model.mountain(s.random_mountain(rng));
        Mountain uv = c.model.mul(u, v);
        check(prefix_of(u.left_hill(), uv.left_hill()), "left hill prefix");
        check(prefix_of(reverse(v.right_hill()), reverse(uv.right_hill())),
              "right hill suffix");
        auto hu = c.store.height(u.peak()), hv = c.store.height(v.peak());
        auto huv = c.store.height(uv.peak());
        check(huv >= std::max(hu, hv), "height of product");
        check((huv == hu) == (uv.peak() == u.peak()), "peak of product");
      }
    }

    void regularity(Ctx& c, Check& check) {
      Sampler s(c.store, c.hm);
      Rng     rng(c.seed);
      for (int k = 0; k < 200; ++k) {
        Mountain u  = c.model.mountain(s.random_mountain(rng));
        Mountain ub = c.model.mountain(beta2(c.store, reverse(u.landscape())));
        check(c.model.mul(u, ub, u) == u && c.model.mul(ub, u, ub) == ub,
              c.model.serialize(u));
      }
    }

    void updownhill(Ctx& c, Check& check) {
      Sampler s(c.store, c.hm);
      Rng     rng(c.seed);
      for (int k = 0; k < 100; ++k) {
        Landscape v = s.random_downhill(rng);
        Landscape w = star(v, reverse(v));
        switch (is_gorge(c.store, w)) {
          case GorgeResult::Gorge: check(true, ""); break;
          case GorgeResult::NotGorge:
            check(false, serialize(c.store, w) + " is not a gorge");
            break;
          default: check.unknown();
        }
      }
    }

    void inverse_sets(Ctx& c, Check& check) {
      Sampler s(c.store, c.hm);
      Rng     rng(c.seed);
      for (int k = 0; k < 100; ++k) {
        Mountain u   = c.model.mountain(s.random_mountain(rng));
        Mountain ub  = c.model.mountain(beta2(c.store, reverse(u.landscape())));
        auto     inv = c.model.inverses(u);
        check(std::find(inv.begin(), inv.end(), ub) != inv.end(),
              "reverse of " + c.model.serialize(u));
      }
    }

    void idempotent_gorge(Ctx& c, Check& check) {
      for (auto const& u : all_mountains(c, c.hs)) {
        auto g = c.model.idempotent_by_gorge(u);
        if (g == GorgeResult::Unknown) {
          check.unknown();
          continue;
        }
        check((g == GorgeResult::Gorge) == c.model.is_idempotent(u),
              c.model.serialize(u));
      }
    }

    void green_coherence(Ctx& c, Check& check) {
      Sampler s(c.store, c.hm);
      Rng     rng(c.seed);
      auto&   m = c.model;
      for (int k = 0; k < 300; ++k) {
        Mountain u = m.mountain(s.random_mountain(rng));
        // Bias towards related pairs: half the time share the peak.
        Mountain v = k % 2 == 0 ? m.dclass(u)[rng() % m.dclass(u).size()]
                                : m.mountain(s.random_mountain(rng));
        bool r = m.green(Green::R, u, v), l = m.green(Green::L, u, v);
        check(!(r && l) || u == v, "H is trivial");
        check(m.green(Green::J, u, v) == m.green(Green::D, u, v), "J = D");
        check(r == (m.green(Green::LeqR, u, v) && m.green(Green::LeqR, v, u)),
              "R from leqR");
        check(l == (m.green(Green::LeqL, u, v) && m.green(Green::LeqL, v, u)),
              "L from leqL");
        if (m.natural_leq(v, u)) {
          check(m.green(Green::LeqR, v, u) && m.green(Green::LeqL, v, u)
                    && m.green(Green::LeqJ, v, u),
                "natural order inside leqR and leqL");
        }
      }
    }

    void natural_order_routes(Ctx& c, Check& check) {
      Sampler s(c.store, std::min(c.hm, 2u));
      Rng     rng(c.seed);
      auto&   m = c.model;
      auto    compare = [&](Mountain const& v, Mountain const& u) {
        Tri t = m.natural_leq_gorge(v, u);
        if (t == Tri::Unknown) {
          check.unknown();
          return;
        }
        check((t == Tri::True) == m.natural_leq(v, u),
              m.serialize(v) + " <= " + m.serialize(u));
      };
      for (int k = 0; k < 100; ++k) {
        Mountain u = m.mountain(s.random_mountain(rng));
        Mountain v = m.mountain(s.random_mountain(rng));
        compare(v, u);
        compare(u, Mountain{});
        // e u with e an idempotent in the R-class of u u'
        Mountain e = m.mul(u, m.inverses(u).front());
        compare(m.mul(e, u), u);
      }
    }

    void fixed_point(Ctx& c, Check& check) {
      for (auto const& u : all_mountains(c, c.hs)) {
        check(beta(c.store, u.landscape().as_word()) == u.landscape(),
              c.model.serialize(u));
      }
    }

    void round_trip(Ctx& c, Check& check) {
      Sampler s(c.store, c.hm);
      Rng     rng(c.seed);
      for (int k = 0; k < 200; ++k) {
        Landscape u = k % 2 == 0 ? s.random_mountain(rng)
                                 : s.random_landscape(rng, 1 + rng() % 7);
        std::string text = serialize(c.store, u);
        check(parse_landscape(c.store, text) == u, "parse " + text);
        check(landscape_from_json(c.store, to_json(c.store, u)) == u,
              "json " + text);
        check(reverse(reverse(u)) == u, "reverse " + text);
        if (is_mountain_range(u)) {
          Landscape nf = beta2(c.store, u);
          check(beta(c.store, parse_word(c.store, serialize(c.store, nf))) == nf,
                "normalize " + text);
        }
      }
    }

    void valley_lemma(Ctx& c, Check& check) {
      Sampler s(c.store, std::min(c.hm, 2u));
      Rng     rng(c.seed);
      for (int k = 0; k < 30; ++k) {
        Landscape u = s.random_landscape(rng, 1 + rng() % 4);
        Landscape target =
            star(star(lambda_l(c.store, u.first()), u), lambda_r(c.store, u.last()));
        switch (reduces_to(c.store, beta1(c.store, u.as_word()), target)) {
          case Reach::Yes: check(true, ""); break;
          case Reach::No: check(false, serialize(c.store, u)); break;
          default: check.unknown();
        }
      }
    }

    void skeleton(Ctx& c, Check& check) {
      auto const t3 = full_transformation_monoid(3);
      std::vector<Elem> const xs{transformation_id({2, 1, 0}),
                                 transformation_id({0, 0, 1})};
      auto const rel = relations(c.store, c.hm);
      Sampler    s(c.store, c.hm);
      for (auto strat : {ChoiceStrategy::first(), ChoiceStrategy::seeded(c.seed)}) {
        auto sk = build_skeleton(c.store, t3, xs, strat, c.hm);
        Rng  rng(c.seed);
        auto const& t = sk.target();
        for (GenId g : enumerate_up_to(c.store, c.hm)) {
          if (c.store.height(g) >= 2) {
            check(t.is_idempotent(sk.phi_l(g)) && t.is_idempotent(sk.phi_r(g)),
                  "g^{phi,l}, g^{phi,r} idempotent");
          }
        }
        for (int k = 0; k < 100; ++k) {
          auto [u, v] = s.random_equivalent_pair(rng, rel, 4);
          check(equivalent(c.store, u, v), "pair not equivalent");
          check(phi_hat(sk, u) == phi_hat(sk, v), serialize(c.store, u));
          Word uv = cat({u, v});
          check(phi_hat(sk, uv) == t.mul(phi_hat(sk, u), phi_hat(sk, v)),
                "phi_hat multiplicative");
        }
        auto cl = image_closure(sk, c.hm);
        check(cl.regular, "closure regular");
        check(cl.one_phi_is_identity, "1 phi is the identity");
      }
    }

    struct Property {
      char const* name;
      void (*run)(Ctx&, Check&);
    };

    constexpr Property kProperties[] = {
        {"counting", counting},
        {"rho_soundness", rho_soundness},
        {"uplift_soundness", uplift_soundness},
        {"confluence", confluence},
        {"termination_measure", termination},
        {"generator_products", generator_products},
        {"associativity", associativity},
        {"product_hills", model_hills},
        {"regularity", regularity},
        {"updownhill_gorge", updownhill},
        {"reverse_is_inverse", inverse_sets},
        {"idempotent_gorge", idempotent_gorge},
        {"green_coherence", green_coherence},
        {"natural_order_routes", natural_order_routes},
        {"normal_form_fixed_point", fixed_point},
        {"round_trip", round_trip},
        {"valley_reduction", valley_lemma},
        {"skeleton_homomorphism", skeleton},
    };
  }  // namespace

  std::string format_result(PropertyResult const& r, std::uint64_t seed) {
    std::string s = (r.passed() ? "PASS " : "FAIL ") + r.name
                    + " checked=" + std::to_string(r.checked)
                    + " failed=" + std::to_string(r.failed);
    if (r.unknown != 0) {
      s += " unknown=" + std::to_string(r.unknown);
    }
    s += " seed=" + std::to_string(seed);
    if (!r.passed()) {
      s += " first=\"" + r.note + "\"";
    }
    return s;
  }

  std::vector<std::string> selftest_properties() {
    std::vector<std::string> out;
    for (auto const& p : kProperties) {
      out.emplace_back(p.name);
    }
    return out;
  }

  std::vector<PropertyResult> run_selftest(
      SelftestOptions const&                            opts,
      std::function<void(PropertyResult const&)> const& on_result) {
    if (opts.max_height < 1) {
      throw Error(Errc::BadArgument, "selftest needs max height >= 1");
    }
    Ctx c;
    c.h    = opts.max_height;
    c.hm   = std::min(opts.max_height, 3u);
    c.hs   = std::min(opts.max_height, 2u);
    c.seed = opts.seed;
    c.store.set_height_cap(std::max(kSuiteHeightCap, c.h + 8));

    std::vector<PropertyResult> out;
    for (std::size_t i = 0; i < std::size(kProperties); ++i) {
      PropertyResult r;
      r.name = kProperties[i].name;
      Check check{r};
      std::uint64_t const base = c.seed;
      c.seed = base + i;
      try {
        kProperties[i].run(c, check);
      } catch (Error const& e) {
        ++r.failed;
        r.note = e.what();
      }
      c.seed = base;
      if (on_result) {
        on_result(r);
      }
      out.push_back(std::move(r));
    }
    return out;
  }

}  // namespace weakgen
