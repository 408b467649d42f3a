#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "support.hpp"
#include "weakgen/model.hpp"
#include "weakgen/sampling.hpp"

using namespace weakgen;
using weakgen::test::error_of;

namespace {
  // Every mountain whose peak has height <= h.
  std::vector<Mountain> all_mountains(Model& m, unsigned h) {
    std::vector<Mountain> out{Mountain{}};
    for (GenId g : enumerate_up_to(m.store(), h)) {
      for (auto const& u : enumerate_mountains(m.store(), g)) {
        out.push_back(m.mountain(u));
      }
    }
    return out;
  }

  std::set<std::string> texts(Model const& m, std::vector<Mountain> const& v) {
    std::set<std::string> out;
    for (auto const& u : v) {
      out.insert(m.serialize(u));
    }
    return out;
  }

  bool is_inverse(Model const& m, Mountain const& u, Mountain const& v) {
    return m.mul(u, v, u) == u && m.mul(v, u, v) == v;
  }

  struct Fixture {
    GenStore              st{Alphabet::from_list("x,y"), 24};
    Model                 model{st};
    std::vector<Mountain> all = all_mountains(model, 2);
    std::vector<Mountain> idem;

    Fixture() {
      for (auto const& u : all) {
        if (model.mul(u, u) == u) {
          idem.push_back(u);
        }
      }
    }

    Mountain p(char const* w) {
      return model.parse(w);
    }
  };
}  // namespace

TEST_CASE_FIXTURE(Fixture, "products") {
  CHECK(all.size() == 201);
  CHECK(model.serialize(model.mul(p("x"), p("x'"))) == "1 1 B(x) 1 1");
  CHECK(model.serialize(model.mul(p("x"), p("x")))
        == "1 1 B(x) x T(B(x);1;1;x;B(x)) 1 B(x) x 1");
  for (auto const& u : all) {
    CHECK(model.mul(u, Mountain{}) == u);
    CHECK(model.mul(Mountain{}, u) == u);
  }
  CHECK(error_of([&] { model.mountain(parse_landscape(st, "1 1 B(x) x 1 x' B(x) 1 1")); })
        == Errc::NotMountain);
}

TEST_CASE_FIXTURE(Fixture, "associativity on random triples") {
  Sampler s(st, 3);
  Rng     rng(41);
  for (int i = 0; i < 200; ++i) {
    Mountain u = model.mountain(s.random_mountain(rng));
    Mountain v = model.mountain(s.random_mountain(rng));
    Mountain w = model.mountain(s.random_mountain(rng));
    CHECK(model.mul(model.mul(u, v), w) == model.mul(u, model.mul(v, w)));
  }
}

TEST_CASE_FIXTURE(Fixture, "green examples") {
  CHECK(model.green(Green::R, p("x"), p("B(x)")));
  CHECK(model.green(Green::J, p("x"), p("x' x")));
  CHECK(model.green(Green::D, p("x"), p("x' x")));
  CHECK(!model.green(Green::H, p("x"), p("B(x)")));
  CHECK(model.green(Green::H, p("x"), p("x")));
  CHECK(!model.green(Green::L, p("x"), p("B(x)")));
  CHECK(model.green(Green::LeqJ, p("x x"), p("x")));
  CHECK(!model.green(Green::LeqJ, p("x"), p("x x")));
  CHECK(green_from_string("leqR") == Green::LeqR);
  CHECK(to_string(Green::LeqL) == "leqL");
  CHECK(error_of([] { green_from_string("Q"); }) == Errc::BadArgument);
}

TEST_CASE_FIXTURE(Fixture, "green quasi-orders agree with their algebraic definitions") {
  // u <=_R v iff u = v v' u for an inverse v' of v; dually for L.
  for (auto const& v : all) {
    Mountain vp = model.mountain(reverse(v.landscape()));
    REQUIRE(is_inverse(model, v, vp));
    Mountain e = model.mul(v, vp), f = model.mul(vp, v);
    for (auto const& u : all) {
      CHECK(model.green(Green::LeqR, u, v) == (model.mul(e, u) == u));
      CHECK(model.green(Green::LeqL, u, v) == (model.mul(u, f) == u));
      bool r = model.green(Green::R, u, v), l = model.green(Green::L, u, v);
      CHECK(model.green(Green::H, u, v) == (r && l));
      CHECK(model.green(Green::H, u, v) == (u == v));
      CHECK(model.green(Green::J, u, v) == model.green(Green::D, u, v));
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "idempotents") {
  CHECK(model.is_idempotent(p("x x'")));
  CHECK(!model.is_idempotent(p("x")));
  CHECK(model.is_idempotent(Mountain{}));
  for (auto const& u : all) {
    bool e = model.is_idempotent(u);
    CHECK(e == (std::find(idem.begin(), idem.end(), u) != idem.end()));
    auto gorge = model.idempotent_by_gorge(u);
    if (gorge != GorgeResult::Unknown) {
      CHECK(e == (gorge == GorgeResult::Gorge));
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "inverses agree with a search over every mountain") {
  CHECK(texts(model, model.inverses(p("x"))) == std::set<std::string>{"1 x' B(x) 1 1"});
  auto e = model.inverses(p("x x'"));
  CHECK(std::find(e.begin(), e.end(), p("x x'")) != e.end());
  for (auto const& u : all) {
    std::vector<Mountain> found;
    for (auto const& v : all) {
      if (is_inverse(model, u, v)) {
        found.push_back(v);
      }
    }
    auto inv = model.inverses(u);
    CHECK(texts(model, inv) == texts(model, found));
    CHECK(std::is_sorted(inv.begin(), inv.end(), [&](auto const& a, auto const& b) {
      return model.serialize(a) < model.serialize(b);
    }));
  }
}

TEST_CASE_FIXTURE(Fixture, "reverse is an inverse") {
  Sampler s(st, 3);
  Rng     rng(43);
  for (int i = 0; i < 100; ++i) {
    Mountain u  = model.mountain(s.random_mountain(rng));
    Mountain ur = model.mountain(reverse(u.landscape()));
    CHECK(is_inverse(model, u, ur));
    auto inv = model.inverses(u);
    CHECK(std::find(inv.begin(), inv.end(), ur) != inv.end());
  }
}

TEST_CASE_FIXTURE(Fixture, "sandwich sets agree with their definition") {
  CHECK(texts(model, model.sandwich_set(p("x' x"), p("x x'")))
        == std::set<std::string>{"1 1 B(x) 1 T(B(x);1;1;x;B(x)) x' B(x) x 1"});
  CHECK(error_of([&] { model.sandwich_set(p("x"), p("x x'")); }) == Errc::NotIdempotent);
  for (auto const& e : idem) {
    CHECK(model.sandwich_set(e, e) == std::vector<Mountain>{e});
  }
  std::vector<Mountain> low;
  for (auto const& e : idem) {
    if (st.height(e.peak()) <= 1) {
      low.push_back(e);
    }
  }
  for (auto const& e : low) {
    for (auto const& f : low) {
      Mountain              ef = model.mul(e, f);
      std::vector<Mountain> by_def;
      for (auto const& g : idem) {
        if (model.mul(f, g) == g && model.mul(g, e) == g
            && model.mul(e, g, f) == ef) {
          by_def.push_back(g);
        }
      }
      auto s = model.sandwich_set(e, f);
      CHECK(!s.empty());
      CHECK(texts(model, s) == texts(model, by_def));
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "sandwich of g^R g^c and g^c g^L") {
  auto cat = [](Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  for (unsigned h = 2; h <= 3; ++h) {
    for (GenId g : enumerate(st, h, KindFilter::All)) {
      Word     c{Token::gen(st.middle(g))};
      Mountain e = Mountain::of_word(st, cat(gR_word(st, g), c));
      Mountain f = Mountain::of_word(st, cat(c, gL_word(st, g)));
      auto     s = model.sandwich_set(e, f);
      REQUIRE(s.size() == 1);
      CHECK(s[0].landscape() == beta1(st, Token::gen(g)));
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "natural order agrees with the idempotent definition") {
  CHECK(model.natural_leq(p("x"), p("x")));
  CHECK(model.natural_leq(p("B(x)"), Mountain{}));
  CHECK(!model.natural_leq(p("x"), p("B(x)")));
  // v <= u iff v = e u = u f for idempotents e, f; e and f can be taken
  // in the D-class of v, so idempotents of height <= 2 suffice.
  std::vector<Mountain> us(all.begin(), all.begin() + 9);
  Sampler               s(st, 2);
  Rng                   rng(47);
  for (int i = 0; i < 12; ++i) {
    us.push_back(model.mountain(s.random_mountain(rng)));
  }
  for (auto const& u : us) {
    for (auto const& v : all) {
      bool left = false, right = false;
      for (auto const& e : idem) {
        left  = left || model.mul(e, u) == v;
        right = right || model.mul(u, e) == v;
      }
      bool leq = model.natural_leq(v, u);
      CHECK(leq == (left && right));
      if (leq) {
        CHECK(model.green(Green::LeqR, v, u));
        CHECK(model.green(Green::LeqL, v, u));
        CHECK(model.green(Green::LeqJ, v, u));
      }
      if (st.height(u.peak()) <= 1 && st.height(v.peak()) <= 1) {
        Tri t = model.natural_leq_gorge(v, u);
        if (t != Tri::Unknown) {
          CHECK((t == Tri::True) == leq);
        }
      }
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "classes") {
  CHECK(texts(model, model.dclass(p("x")))
        == std::set<std::string>{"1 1 B(x) 1 1", "1 1 B(x) x 1", "1 x' B(x) 1 1",
                                 "1 x' B(x) x 1"});
  CHECK(texts(model, model.rclass(p("x")))
        == std::set<std::string>{"1 1 B(x) 1 1", "1 1 B(x) x 1"});
  CHECK(texts(model, model.lclass(p("x")))
        == std::set<std::string>{"1 1 B(x) x 1", "1 x' B(x) x 1"});
  CHECK(model.class_sizes(parse_gen(st, "T(B(x);1;1;x;B(x))")) == ClassSizes{4, 4, 16});
  for (GenId g : enumerate_up_to(st, 3)) {
    std::size_t n = std::size_t(1) << st.height(g);
    CHECK(model.class_sizes(g) == ClassSizes{n, n, n * n});
  }
  for (auto const& u : all) {
    std::vector<Mountain> r, l, d;
    for (auto const& v : all) {
      if (model.green(Green::R, u, v)) r.push_back(v);
      if (model.green(Green::L, u, v)) l.push_back(v);
      if (model.green(Green::D, u, v)) d.push_back(v);
    }
    CHECK(texts(model, model.rclass(u)) == texts(model, r));
    CHECK(texts(model, model.lclass(u)) == texts(model, l));
    CHECK(texts(model, model.dclass(u)) == texts(model, d));
  }
}

TEST_CASE_FIXTURE(Fixture, "hills of products") {
  Sampler s(st, 3);
  Rng     rng(53);
  for (int i = 0; i < 200; ++i) {
    Mountain u  = model.mountain(s.random_mountain(rng));
    Mountain v  = model.mountain(s.random_mountain(rng));
    Mountain uv = model.mul(u, v);
    CHECK(model.green(Green::LeqR, uv, u));
    CHECK(model.green(Green::LeqL, uv, v));
    auto hu = st.height(u.peak()), hv = st.height(v.peak()), huv = st.height(uv.peak());
    CHECK(huv >= std::max(hu, hv));
    CHECK((huv == hu) == (uv.peak() == u.peak()));
    CHECK(star(u.left_hill(), u.right_hill()) == u.landscape());
  }
}
