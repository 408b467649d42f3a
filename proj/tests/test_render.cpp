#include <regex>
#include <string>
#include <vector>

#include "doctest.h"
#include "weakgen/render.hpp"
#include "weakgen/rewrite.hpp"

using namespace weakgen;

namespace {
  std::size_t count(std::string const& s, std::string const& what) {
    std::size_t n = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) {
      ++n;
    }
    return n;
  }

  std::vector<int> circle_ys(std::string const& svg) {
    std::regex      re("<circle cx=\"\\d+\" cy=\"(\\d+)\"");
    std::vector<int> out;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re);
         it != std::sregex_iterator(); ++it) {
      out.push_back(std::stoi((*it)[1]));
    }
    return out;
  }
}  // namespace

TEST_CASE("ascii") {
  GenStore st(Alphabet::from_list("x"));
  CHECK(render_ascii(st, parse_landscape(st, "1 1 B(x) x 1"))
        == "1 |     B(x)\n"
           "0 | 1 1      x 1\n");
  CHECK(render_ascii(st, Landscape::single(kUnit)) == "0 | 1\n");
  CHECK(render_ascii(st, parse_landscape(st, "1 1 B(x) 1 T(B(x);1;1;x;B(x)) x' B(x) x 1"))
        == "2 |            [0]\n"
           "1 |     B(x) 1     x' B(x)\n"
           "0 | 1 1                    x 1\n"
           "[0] = T(B(x);1;1;x;B(x))\n");
}

TEST_CASE("svg") {
  GenStore    st(Alphabet::from_list("x"));
  std::string svg = render_svg(st, beta(st, parse_word(st, "x x")));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(count(svg, "<circle") == 5);
  CHECK(count(svg, "<line") == 4);
  // heights 0 1 2 1 0 on a 40px grid, highest row at the top
  CHECK(circle_ys(svg) == std::vector<int>{120, 80, 40, 80, 120});
  CHECK(svg.find("<title>T(B(x);1;1;x;B(x))</title>") != std::string::npos);
  CHECK(svg.find("[0] = T(B(x);1;1;x;B(x))") != std::string::npos);

  std::string one = render_svg(st, Landscape::single(kUnit));
  CHECK(count(one, "<circle") == 1);
  CHECK(count(one, "<line") == 0);
}

TEST_CASE("json") {
  GenStore  st(Alphabet::from_list("x"));
  Landscape u = beta(st, parse_word(st, "x x"));
  auto      j = render_json(st, u);
  CHECK(j["vertices"].size() == 5);
  CHECK(j["edges"].size() == 4);
  CHECK(j["vertices"][2]["label"] == "[0]");
  CHECK(j["vertices"][2]["height"] == 2);
  CHECK(j["edges"][1]["anchor"] == "x");
  CHECK(j["edges"][1]["from"] == 1);
  CHECK(j["edges"][1]["to"] == 2);
  CHECK(landscape_from_json(st, j["landscape"]) == u);
}
