#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "support.hpp"
#include "weakgen/landscape.hpp"
#include "weakgen/sampling.hpp"

using namespace weakgen;
using weakgen::test::error_of;

namespace {
  std::vector<Anchor> all_anchors(Alphabet const& a) {
    std::vector<Anchor> out{Anchor::one()};
    for (LetterId x = 0; x < a.size(); ++x) {
      out.push_back(Anchor::plain(x));
      out.push_back(Anchor::primed(x));
    }
    return out;
  }

  std::vector<GenId> with_height(GenStore& st, unsigned h) {
    if (h == 0) {
      return {kUnit};
    }
    return enumerate(st, h, KindFilter::All);
  }

  // Every anchored walk 1 = g_0 a_1 g_1 ... a_n g_n = g with heights going
  // up by one, found by trying every letter of the next height and every
  // anchor.
  std::set<std::string> uphills_by_search(GenStore& st, GenId g) {
    std::vector<Landscape> walks{Landscape::single(kUnit)};
    auto anchors = all_anchors(st.alphabet());
    for (unsigned h = 1; h <= st.height(g); ++h) {
      std::vector<Landscape> next;
      for (auto const& w : walks) {
        for (GenId c : with_height(st, h)) {
          for (Anchor a : anchors) {
            if (is_anchored(st, w.last(), a, c)) {
              Landscape v = w;
              v.anchors.push_back(a);
              v.letters.push_back(c);
              next.push_back(v);
            }
          }
        }
      }
      walks = std::move(next);
    }
    std::set<std::string> out;
    for (auto const& w : walks) {
      if (w.last() == g) {
        out.insert(serialize(st, w));
      }
    }
    return out;
  }

  std::set<std::string> texts(GenStore const& st,
                              std::vector<Landscape> const& v) {
    std::set<std::string> out;
    for (auto const& u : v) {
      out.insert(serialize(st, u));
    }
    return out;
  }
}  // namespace

TEST_CASE("anchoring examples") {
  GenStore st(Alphabet::from_list("x,y"));
  GenId    bx  = st.base("x");
  GenId    by  = st.base("y");
  GenId    g2x = parse_gen(st, "T(B(x);1;1;x;B(x))");
  Anchor   x   = Anchor::plain(0);
  CHECK(is_left_anchored(st, bx, Anchor::one(), g2x));
  CHECK(is_right_anchored(st, g2x, x.inverse(), bx));
  CHECK(!is_left_anchored(st, g2x, x.inverse(), bx));
  CHECK(!is_anchored(st, bx, Anchor::plain(1), by));
}

TEST_CASE("validate_landscape") {
  GenStore st(Alphabet::from_list("x,y"));
  CHECK(serialize(st, parse_landscape(st, "1 1 B(x) x 1")) == "1 1 B(x) x 1");
  CHECK(serialize(st, parse_landscape(st, "1 x' B(x) x 1")) == "1 x' B(x) x 1");
  CHECK(error_of([&] { parse_landscape(st, "B(x) 1 B(y)"); })
        == Errc::TripletNotAnchored);
  CHECK(error_of([&] { parse_landscape(st, "1 1 B(x) B(x) 1"); })
        == Errc::NotAlternating);
  CHECK(error_of([&] { parse_landscape(st, "1 1 B(x) x"); })
        == Errc::NotAlternating);
  CHECK(error_of([&] { parse_landscape(st, "1 1 B(q) x 1"); })
        == Errc::UnknownLetter);
  CHECK(parse_landscape(st, "1").is_single());
}

TEST_CASE("star") {
  GenStore  st(Alphabet::from_list("x,y"));
  Landscape u = parse_landscape(st, "1 1 B(x) x 1");
  Landscape v = parse_landscape(st, "1 x' B(x) 1 1");
  CHECK(serialize(st, star(u, v)) == "1 1 B(x) x 1 x' B(x) 1 1");
  Landscape g = Landscape::single(st.base("x"));
  CHECK(star(g, g) == g);
  CHECK(error_of([&] {
          star(parse_landscape(st, "1 1 B(x)"), parse_landscape(st, "1 1 B(y)"));
        })
        == Errc::JunctionMismatch);
}

TEST_CASE("reverse") {
  GenStore st(Alphabet::from_list("x,y"));
  CHECK(serialize(st, reverse(parse_landscape(st, "1 1 B(x) x 1")))
        == "1 x' B(x) 1 1");
  Landscape g = Landscape::single(st.base("y"));
  CHECK(reverse(g) == g);

  Sampler s(st, 3);
  Rng     rng(11);
  for (int i = 0; i < 100; ++i) {
    Landscape u = s.random_landscape(rng, 1 + i % 9);
    Landscape r = reverse(u);
    CHECK(reverse(r) == u);
    CHECK(validate_landscape(st, r.as_word()) == r);
  }
  for (int i = 0; i < 50; ++i) {
    Landscape m = s.random_mountain(rng);
    CHECK(is_mountain(st, reverse(m)));
  }
}

TEST_CASE("classification") {
  GenStore st(Alphabet::from_list("x,y"));
  auto     cls = [&](char const* t) { return classify(st, parse_landscape(st, t)); };
  CHECK(cls("B(x)") == ShapeClass::SingleLetter);
  CHECK(cls("1 1 B(x)") == ShapeClass::Uphill);
  CHECK(cls("B(x) x 1") == ShapeClass::Downhill);
  CHECK(cls("1 x' B(x) x 1") == ShapeClass::Mountain);
  CHECK(cls("1 1 B(x) x 1 x' B(x) 1 1") == ShapeClass::MountainRange);
  CHECK(cls("B(x) x 1 x' B(x)") == ShapeClass::Canyon);
  CHECK(cls("B(x) x 1 1 B(y)") == ShapeClass::Valley);
  CHECK(cls("1 1 B(x) 1 T(B(x);1;1;x;B(x)) x' B(x)") == ShapeClass::UpDown);
  CHECK(cls("B(x) x 1 x' B(x) 1 1") == ShapeClass::General);
  CHECK(to_string(ShapeClass::MountainRange) == "MountainRange");
}

TEST_CASE("rivers, peaks, kappa and height") {
  GenStore  st(Alphabet::from_list("x,y"));
  Landscape u = parse_landscape(st, "1 1 B(x) x 1 x' B(x) 1 1");
  CHECK(rivers(st, u) == std::vector<std::size_t>{2});
  CHECK(peaks(st, u) == std::vector<std::size_t>{1, 3});
  CHECK(ridges(st, u) == std::vector<std::size_t>{1, 3});
  CHECK(height(st, u) == 1);
  CHECK(error_of([&] { kappa(st, u); }) == Errc::KappaNotUnique);
  CHECK(kappa(st, parse_landscape(st, "1 1 B(x) x 1")) == st.base("x"));
  CHECK(kappa(st, Landscape::single(st.base("y"))) == st.base("y"));
  CHECK(height(st, parse_landscape(st, "B(x) x 1")) == 1);
}

TEST_CASE("lambda_l and lambda_r") {
  GenStore st(Alphabet::from_list("x,y"));
  GenId    g2x = parse_gen(st, "T(B(x);1;1;x;B(x))");
  CHECK(serialize(st, lambda_l(st, st.base("x"))) == "1 1 B(x)");
  CHECK(serialize(st, lambda_l(st, g2x)) == "1 1 B(x) 1 T(B(x);1;1;x;B(x))");
  CHECK(serialize(st, lambda_r(st, g2x)) == "T(B(x);1;1;x;B(x)) x' B(x) x 1");
  CHECK(lambda_l(st, kUnit).is_single());
  CHECK(lambda_r(st, kUnit).is_single());

  for (GenId g : enumerate_up_to(st, 3)) {
    Landscape l = lambda_l(st, g);
    Landscape m = star(l, lambda_r(st, g));
    CHECK(classify(st, l) == ShapeClass::Uphill);
    CHECK(is_mountain(st, m));
    CHECK(kappa(st, m) == g);
  }
}

TEST_CASE("beta1") {
  GenStore st(Alphabet::from_list("x,y"));
  auto     b1 = [&](char const* t) {
    return serialize(st, beta1(st, parse_word(st, t)));
  };
  CHECK(b1("x") == "1 1 B(x) x 1");
  CHECK(b1("x'") == "1 x' B(x) 1 1");
  CHECK(b1("1") == "1");
  CHECK(b1("x x'") == "1 1 B(x) x 1 x' B(x) 1 1");

  Sampler s(st, 3);
  Rng     rng(5);
  for (int i = 0; i < 200; ++i) {
    Word      w = s.random_word(rng, 1 + i % 7);
    Landscape u = beta1(st, w);
    CHECK(validate_landscape(st, u.as_word()) == u);
    CHECK(is_mountain_range(u));
    CHECK(u.length() % 4 == 1);
    auto c = classify(st, u);
    CHECK((c == ShapeClass::Mountain || c == ShapeClass::MountainRange
           || c == ShapeClass::SingleLetter));
  }
  for (GenId g : enumerate_up_to(st, 3)) {
    CHECK(beta1(st, Token::gen(g)) == star(lambda_l(st, g), lambda_r(st, g)));
  }
}

TEST_CASE("uphills agree with an exhaustive anchored search") {
  GenStore st(Alphabet::from_list("x,y"));
  CHECK(texts(st, enumerate_uphills(st, st.base("x")))
        == std::set<std::string>{"1 1 B(x)", "1 x' B(x)"});
  for (GenId g : enumerate_up_to(st, 3)) {
    auto up = enumerate_uphills(st, g);
    CHECK(up.size() == (std::size_t(1) << st.height(g)));
    CHECK(texts(st, up) == uphills_by_search(st, g));
  }
}

TEST_CASE("downhills are reversed uphills") {
  GenStore st(Alphabet::from_list("x,y"));
  for (GenId g : enumerate_up_to(st, 3)) {
    std::vector<Landscape> rev;
    for (auto const& u : enumerate_uphills(st, g)) {
      rev.push_back(reverse(u));
    }
    auto down = enumerate_downhills(st, g);
    CHECK(down.size() == rev.size());
    CHECK(texts(st, down) == texts(st, rev));
  }
}

TEST_CASE("mountain counts") {
  GenStore st(Alphabet::from_list("x,y"));
  CHECK(enumerate_mountains(st, kUnit).size() == 1);
  CHECK(texts(st, enumerate_mountains(st, st.base("x")))
        == std::set<std::string>{"1 1 B(x) x 1", "1 1 B(x) 1 1",
                                 "1 x' B(x) x 1", "1 x' B(x) 1 1"});
  for (GenId g : enumerate_up_to(st, 3)) {
    auto ms = enumerate_mountains(st, g);
    CHECK(ms.size() == (std::size_t(1) << (2 * st.height(g))));
    CHECK(texts(st, ms).size() == ms.size());
    for (auto const& m : ms) {
      CHECK(is_mountain(st, m));
      CHECK(kappa(st, m) == g);
    }
  }
}

TEST_CASE("json round trip") {
  GenStore  st(Alphabet::from_list("x,y"));
  Landscape u = parse_landscape(st, "1 1 B(x) 1 T(B(x);1;1;x;B(x)) x' B(x) x 1");
  auto      j = to_json(st, u);
  CHECK(j["letters"].size() == 5);
  CHECK(j["letters"][2]["height"] == 2);
  CHECK(j["letters"][2]["term"] == "T(B(x);1;1;x;B(x))");
  CHECK(j["anchors"][2] == "x'");
  CHECK(landscape_from_json(st, j) == u);
  nlohmann::json bad = {{"letters", nlohmann::json::array()}};
  CHECK(error_of([&] { landscape_from_json(st, bad); }).has_value());
}
