// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "weakgen/finite.hpp"
#include "weakgen/model.hpp"
#include "weakgen/rewrite.hpp"
#include "weakgen/sampling.hpp"
#include "weakgen/selftest.hpp"

using namespace weakgen;

namespace {
  constexpr std::uint64_t kSeed = 20240607;

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  Alphabet xy() {
    return Alphabet::from_list("x,y");
  }

  std::set<std::string> texts(Model const& m, std::vector<Mountain> const& v) {
    std::set<std::string> out;
    for (auto const& u : v) {
      out.insert(m.serialize(u));
    }
    return out;
  }

  Outcome rho_soundness() {
    GenStore    st(xy(), kSuiteHeightCap);
    auto        rel    = relations(st, 4);
    std::size_t failed = 0;
    for (auto const& p : rel) {
      failed += beta(st, p.lhs) != beta(st, p.rhs);
    }
    return {failed == 0 && rel.size() == 137895,
            "pairs=" + std::to_string(rel.size()) + " failed=" + std::to_string(failed)};
  }

  Outcome confluence() {
    GenStore    st(xy(), kSuiteHeightCap);
    Sampler     s(st, 4);
    Rng         rng(kSeed);
    std::size_t failed = 0, uplifts = 0;
    unsigned    top    = 0;
    for (int i = 0; i < 500; ++i) {
      Landscape              u = s.random_mountain_range(rng, 6);
      std::vector<Landscape> trace;
      Landscape              m = beta2(st, u, &trace);
      uplifts += trace.size() - 1;
      top = std::max(top, height(st, m));
      for (int k = 0; k < 10; ++k) {
        failed += reduce_randomly(st, u, rng) != m;
      }
    }
    return {failed == 0, "ranges=500 orders=10 seed=" + std::to_string(kSeed)
                             + " uplifts=" + std::to_string(uplifts) + " max_nf_height="
                             + std::to_string(top) + " failed=" + std::to_string(failed)};
  }

  Outcome counting() {
    GenStore st(xy(), kSuiteHeightCap);
    bool     ok = enumerate(st, 1, KindFilter::E).size() == 2
              && enumerate(st, 2, KindFilter::E).size() == 4
              && enumerate(st, 3, KindFilter::E).size() == 8
              && enumerate(st, 2, KindFilter::D).size() == 8;
    std::size_t gens = 0, bad = 0;
    for (GenId g : enumerate_up_to(st, 3)) {
      std::size_t n = std::size_t(1) << st.height(g);
      bad += enumerate_uphills(st, g).size() != n;
      bad += enumerate_mountains(st, g).size() != n * n;
      ++gens;
    }
    return {ok && bad == 0,
            "levels=" + std::string(ok ? "ok" : "wrong") + " generators=" + std::to_string(gens)
                + " mismatches=" + std::to_string(bad)};
  }

  Outcome regularity() {
    GenStore    st(xy(), kSuiteHeightCap);
    Model       model(st);
    Sampler     s(st, 3);
    Rng         rng(kSeed + 4);
    std::size_t failed = 0;
    for (int i = 0; i < 200; ++i) {
      Mountain u  = model.mountain(s.random_mountain(rng));
      Mountain ur = model.mountain(beta2(st, reverse(u.landscape())));
      failed += model.mul(u, ur, u) != u || model.mul(ur, u, ur) != ur;
    }
    return {failed == 0, "mountains=200 failed=" + std::to_string(failed)};
  }

  Outcome dclass_of_x() {
    GenStore st(xy());
    Model    model(st);
    auto     got      = texts(model, model.dclass(model.parse("x")));
    auto     b1       = [&](char const* w) { return serialize(st, beta1(st, parse_word(st, w))); };
    std::set<std::string> expected{b1("x"), b1("x'"), "1 1 B(x) 1 1", "1 x' B(x) x 1"};
    return {got == expected, "size=" + std::to_string(got.size())};
  }

  Outcome sandwich_singleton() {
    GenStore    st(xy(), kSuiteHeightCap);
    Model       model(st);
    std::size_t checked = 0, failed = 0;
    for (unsigned h = 2; h <= 3; ++h) {
      for (GenId g : enumerate(st, h, KindFilter::All)) {
        Word c{Token::gen(st.middle(g))};
        Word rc = gR_word(st, g), cl = c;
        rc.insert(rc.end(), c.begin(), c.end());
        auto gl = gL_word(st, g);
        cl.insert(cl.end(), gl.begin(), gl.end());
        auto s = model.sandwich_set(Mountain::of_word(st, rc), Mountain::of_word(st, cl));
        ++checked;
        failed += s.size() != 1 || s[0].landscape() != beta1(st, Token::gen(g));
      }
    }
    return {failed == 0 && checked == 276,
            "generators=" + std::to_string(checked) + " failed=" + std::to_string(failed)};
  }

  Outcome idempotent_gorge() {
    GenStore    st(xy(), kSuiteHeightCap);
    Model       model(st);
    std::size_t checked = 0, failed = 0, unknown = 0;
    std::vector<Landscape> all{Landscape::single(kUnit)};
    for (GenId g : enumerate_up_to(st, 2)) {
      for (auto const& u : enumerate_mountains(st, g)) {
        all.push_back(u);
      }
    }
    for (auto const& u : all) {
      Mountain m = model.mountain(u);
      auto     r = model.idempotent_by_gorge(m);
      ++checked;
      if (r == GorgeResult::Unknown) {
        ++unknown;
        continue;
      }
      failed += model.is_idempotent(m) != (r == GorgeResult::Gorge);
    }
    return {failed == 0 && checked == 201,
            "mountains=" + std::to_string(checked) + " failed=" + std::to_string(failed)
                + " unknown=" + std::to_string(unknown)};
  }

  Outcome padded_reach() {
    GenStore    st(xy(), kSuiteHeightCap);
    Sampler     s(st, 3);
    Rng         rng(kSeed + 8);
    std::size_t yes = 0, no = 0, unknown = 0;
    for (int i = 0; i < 100; ++i) {
      Landscape u      = s.random_landscape(rng, 1 + i % 5);
      Landscape target = star(star(lambda_l(st, u.first()), u), lambda_r(st, u.last()));
      switch (reduces_to(st, beta1(st, u.as_word()), target)) {
        case Reach::Yes: ++yes; break;
        case Reach::No: ++no; break;
        case Reach::Unknown: ++unknown; break;
      }
    }
    return {yes == 100, "landscapes=100 yes=" + std::to_string(yes) + " no="
                            + std::to_string(no) + " unknown=" + std::to_string(unknown)};
  }

  Outcome skeleton_homomorphism() {
    auto              t3 = full_transformation_monoid(3);
    Elem const        xi = transformation_id({2, 1, 0});
    std::size_t       pairs = 0, failed = 0;
    bool              closures = true;
    std::ostringstream sizes;
    for (auto strategy : {ChoiceStrategy::first(), ChoiceStrategy::seeded(kSeed)}) {
      GenStore st(Alphabet::from_list("x"), kSuiteHeightCap);
      auto     sk  = build_skeleton(st, t3, {xi}, strategy, 3);
      auto     rel = relations(st, 3);
      Sampler  s(st, 3);
      Rng      rng(kSeed + 9);
      for (int i = 0; i < 100; ++i) {
        auto [u, v] = s.random_equivalent_pair(rng, rel, 3);
        ++pairs;
        failed += !equivalent(st, u, v) || phi_hat(sk, u) != phi_hat(sk, v);
      }
      auto c   = image_closure(sk, 3);
      closures = closures && c.regular && c.one_phi_is_identity;
      sizes << (sizes.tellp() > 0 ? "," : "") << c.elements.size();
    }
    bool x_ok = !t3.is_idempotent(xi);
    return {failed == 0 && closures && x_ok,
            "pairs=" + std::to_string(pairs) + " failed=" + std::to_string(failed)
                + " closure_sizes=" + sizes.str()
                + " closures=" + (closures ? "regular-monoid" : "bad")};
  }

  Outcome fixed_point() {
    GenStore    st(xy(), kSuiteHeightCap);
    std::size_t checked = 0, failed = 0;
    std::vector<GenId> peaks{kUnit};
    for (GenId g : enumerate_up_to(st, 2)) {
      peaks.push_back(g);
    }
    for (GenId g : peaks) {
      for (auto const& m : enumerate_mountains(st, g)) {
        ++checked;
        failed += beta(st, m.as_word()) != m;
      }
    }
    return {failed == 0 && checked == 201,
            "mountains=" + std::to_string(checked) + " failed=" + std::to_string(failed)};
  }
}  // namespace

int main() {
  struct Criterion {
    char const*              name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"rho-soundness", rho_soundness},
      {"confluence", confluence},
      {"counting", counting},
      {"regularity", regularity},
      {"dclass-of-x", dclass_of_x},
      {"sandwich-singleton", sandwich_singleton},
      {"idempotent-gorge", idempotent_gorge},
      {"beta1-reaches-padded", padded_reach},
      {"skeleton-homomorphism", skeleton_homomorphism},
      {"normal-form-fixed-point", fixed_point},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto    t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (std::exception const& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s %2zu %-24s %s time=%.2fs\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
