#include "weakgen/landscape.hpp"

#include <algorithm>

namespace weakgen {

  Word Landscape::as_word() const {
    Word w;
    w.reserve(length());
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i > 0) {
        w.push_back(Token::anchor(anchors[i - 1]));
      }
      w.push_back(Token::gen(letters[i]));
    }
    return w;
  }

  std::size_t LandscapeHash::operator()(Landscape const& u) const noexcept {
    std::size_t h = u.letters.size();
    for (auto g : u.letters) {
      h = h * 1000003u ^ g.value;
    }
    for (auto a : u.anchors) {
      h = h * 1000003u
          ^ (a.is_one() ? 0u : ((std::size_t(a.letter) << 2) | std::size_t(a.kind)));
    }
    return h;
  }

  std::string_view to_string(ShapeClass c) noexcept {
    switch (c) {
      case ShapeClass::SingleLetter: return "SingleLetter";
      case ShapeClass::Uphill: return "Uphill";
      case ShapeClass::Downhill: return "Downhill";
      case ShapeClass::UpDown: return "UpDown";
      case ShapeClass::Valley: return "Valley";
      case ShapeClass::Mountain: return "Mountain";
      case ShapeClass::MountainRange: return "MountainRange";
      case ShapeClass::Canyon: return "Canyon";
      case ShapeClass::General: return "General";
    }
    return "General";
  }

  bool is_left_anchored(GenStore const& store, GenId g1, Anchor a, GenId g2) {
    if (g2 == kUnit) {
      return false;
    }
    for (Side s : {Side::L, Side::R}) {
      if (store.entry(g2, s) == g1 && store.anchor(g2, s) == a) {
        return true;
      }
    }
    return false;
  }

  bool is_right_anchored(GenStore const& store, GenId g1, Anchor a, GenId g2) {
    if (g1 == kUnit) {
      return false;
    }
    for (Side s : {Side::L, Side::R}) {
      if (store.entry(g1, s) == g2 && store.anchor(g1, s).inverse() == a) {
        return true;
      }
    }
    return false;
  }

  Landscape validate_landscape(GenStore const& store, Word const& w) {
    if (w.empty() || w.size() % 2 == 0) {
      throw Error(Errc::NotAlternating,
                  "a landscape has an odd number of tokens");
    }
    Landscape u;
    u.letters.clear();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i % 2 == 0) {
        if (w[i].is_gen()) {
          u.letters.push_back(w[i].as_gen());
        } else if (w[i].as_anchor().is_one()) {
          u.letters.push_back(kUnit);
        } else {
          throw Error(Errc::NotAlternating,
                      "token " + std::to_string(i) + " should be a letter");
        }
      } else {
        if (w[i].is_gen()) {
          throw Error(Errc::NotAlternating,
                      "token " + std::to_string(i) + " should be an anchor");
        }
        u.anchors.push_back(w[i].as_anchor());
      }
    }
    for (std::size_t i = 0; i < u.anchors.size(); ++i) {
      if (!is_anchored(store, u.letters[i], u.anchors[i], u.letters[i + 1])) {
        throw Error(Errc::TripletNotAnchored,
                    "triplet " + std::to_string(i + 1) + " is not anchored");
      }
    }
    return u;
  }

  Landscape parse_landscape(GenStore& store, std::string_view text) {
    Word w;
    auto toks = split_tokens(text);
    for (std::size_t i = 0; i < toks.size(); ++i) {
      auto const& tok = toks[i];
      if (tok.front() == 'B' || tok.front() == 'T') {
        w.push_back(Token::gen(parse_gen(store, tok)));
      } else if (tok == "1" && i % 2 == 0) {
        w.push_back(Token::gen(kUnit));
      } else {
        w.push_back(Token::anchor(parse_anchor(store, tok)));
      }
    }
    if (w.empty()) {
      throw Error(Errc::Syntax, "empty landscape");
    }
    return validate_landscape(store, w);
  }

  Landscape star(Landscape const& u, Landscape const& v) {
    if (u.last() != v.first()) {
      throw Error(Errc::JunctionMismatch,
                  "the last letter of u differs from the first letter of v");
    }
    Landscape out = u;
    out.letters.insert(out.letters.end(), v.letters.begin() + 1,
                       v.letters.end());
    out.anchors.insert(out.anchors.end(), v.anchors.begin(), v.anchors.end());
    return out;
  }

  Landscape reverse(Landscape const& u) {
    Landscape out;
    out.letters.assign(u.letters.rbegin(), u.letters.rend());
    out.anchors.clear();
    for (auto it = u.anchors.rbegin(); it != u.anchors.rend(); ++it) {
      out.anchors.push_back(it->inverse());
    }
    return out;
  }

  namespace {
    std::vector<int> steps(GenStore const& store, Landscape const& u) {
      std::vector<int> d;
      d.reserve(u.anchors.size());
      for (std::size_t i = 1; i < u.letters.size(); ++i) {
        d.push_back(store.height(u.letters[i]) > store.height(u.letters[i - 1])
                        ? 1
                        : -1);
      }
      return d;
    }
  }  // namespace

  ShapeClass classify(GenStore const& store, Landscape const& u) {
    if (u.is_single()) {
      return ShapeClass::SingleLetter;
    }
    auto        d       = steps(store, u);
    std::size_t changes = 0;
    for (std::size_t i = 1; i < d.size(); ++i) {
      changes += d[i] != d[i - 1];
    }
    bool const ends_unit = u.first() == kUnit && u.last() == kUnit;
    if (changes == 0) {
      return d.front() > 0 ? ShapeClass::Uphill : ShapeClass::Downhill;
    }
    if (changes == 1 && d.front() > 0) {
      return ends_unit ? ShapeClass::Mountain : ShapeClass::UpDown;
    }
    if (changes == 1) {
      return u.first() == u.last() ? ShapeClass::Canyon : ShapeClass::Valley;
    }
    return ends_unit ? ShapeClass::MountainRange : ShapeClass::General;
  }

  bool is_mountain_range(Landscape const& u) noexcept {
    return u.first() == kUnit && u.last() == kUnit;
  }

  bool is_mountain(GenStore const& store, Landscape const& u) {
    if (u.is_single()) {
      return u.first() == kUnit;
    }
    return classify(store, u) == ShapeClass::Mountain;
  }

  namespace {
    std::vector<std::size_t> extrema(GenStore const& store,
                                     Landscape const& u,
                                     int              sign) {
      std::vector<std::size_t> out;
      for (std::size_t i = 1; i + 1 < u.letters.size(); ++i) {
        auto h  = static_cast<int>(store.height(u.letters[i]));
        auto hl = static_cast<int>(store.height(u.letters[i - 1]));
        auto hr = static_cast<int>(store.height(u.letters[i + 1]));
        if (hl == hr && hl == h + sign) {
          out.push_back(i);
        }
      }
      return out;
    }
  }  // namespace

  std::vector<std::size_t> rivers(GenStore const& store, Landscape const& u) {
    return extrema(store, u, 1);
  }

  std::vector<std::size_t> ridges(GenStore const& store, Landscape const& u) {
    return extrema(store, u, -1);
  }

  std::vector<std::size_t> peaks(GenStore const& store, Landscape const& u) {
    auto     r   = ridges(store, u);
    unsigned top = 0;
    for (auto i : r) {
      top = std::max(top, store.height(u.letters[i]));
    }
    std::erase_if(r, [&](std::size_t i) {
      return store.height(u.letters[i]) != top;
    });
    return r;
  }

  GenId kappa(GenStore const& store, Landscape const& u) {
    if (u.is_single()) {
      return u.first();
    }
    auto p = peaks(store, u);
    if (p.size() != 1) {
      throw Error(Errc::KappaNotUnique,
                  "landscape has " + std::to_string(p.size()) + " peaks");
    }
    return u.letters[p.front()];
  }

  unsigned height(GenStore const& store, Landscape const& u) {
    unsigned h = std::max(store.height(u.first()), store.height(u.last()));
    for (auto i : ridges(store, u)) {
      h = std::max<unsigned>(h, store.height(u.letters[i]));
    }
    return h;
  }

  Landscape lambda_l(GenStore const& store, GenId g) {
    auto const& n = store.node(g);
    if (n.kind == GenKind::Unit) {
      return Landscape::single(kUnit);
    }
    if (n.kind == GenKind::BaseE) {
      // 1 1 g_{xx'}
      return Landscape{{kUnit, g}, {Anchor::one()}};
    }
    // lambda_l(g^c) followed by the block g^c (g^{la})' g^l g^{la} g
    Landscape u = lambda_l(store, n.mid);
    u.anchors.push_back(n.la.inverse());
    u.letters.push_back(n.left);
    u.anchors.push_back(n.la);
    u.letters.push_back(g);
    return u;
  }

  Landscape lambda_r(GenStore const& store, GenId g) {
    auto const& n = store.node(g);
    if (n.kind == GenKind::Unit) {
      return Landscape::single(kUnit);
    }
    if (n.kind == GenKind::BaseE) {
      return Landscape{{g, kUnit}, {Anchor::one()}};
    }
    // g (g^{ra})' g^r g^{ra} g^c followed by lambda_r(g^c)
    Landscape u{{g, n.right}, {n.ra.inverse(), n.ra}};
    Landscape tail = lambda_r(store, n.mid);
    u.letters.insert(u.letters.end(), tail.letters.begin(), tail.letters.end());
    u.anchors.insert(u.anchors.end(), tail.anchors.begin(), tail.anchors.end());
    return u;
  }

  Landscape left_hill(GenStore const& store, Landscape const& u) {
    std::size_t end = 1;
    while (end < u.letters.size()
           && store.height(u.letters[end]) > store.height(u.letters[end - 1])) {
      ++end;
    }
    Landscape out;
    out.letters.assign(u.letters.begin(), u.letters.begin() + end);
    out.anchors.assign(u.anchors.begin(), u.anchors.begin() + (end - 1));
    return out;
  }

  Landscape right_hill(GenStore const& store, Landscape const& u) {
    std::size_t begin = u.letters.size() - 1;
    while (begin > 0
           && store.height(u.letters[begin - 1])
                  > store.height(u.letters[begin])) {
      --begin;
    }
    Landscape out;
    out.letters.assign(u.letters.begin() + begin, u.letters.end());
    out.anchors.assign(u.anchors.begin() + begin, u.anchors.end());
    return out;
  }

  Landscape beta1(GenStore& store, Token const& t) {
    if (t.is_gen()) {
      GenId g = t.as_gen();
      if (g == kUnit) {
        return Landscape::single(kUnit);
      }
      return star(lambda_l(store, g), lambda_r(store, g));
    }
    Anchor a = t.as_anchor();
    switch (a.kind) {
      case Anchor::Kind::Plain:
        // 1 1 g_{xx'} x 1
        return Landscape{{kUnit, store.base(a.letter), kUnit},
                         {Anchor::one(), a}};
      case Anchor::Kind::Primed:
        // 1 x' g_{xx'} 1 1
        return Landscape{{kUnit, store.base(a.letter), kUnit},
                         {a, Anchor::one()}};
      default: return Landscape::single(kUnit);
    }
  }

  Landscape beta1(GenStore& store, Word const& w) {
    if (w.empty()) {
      throw Error(Errc::BadArgument, "beta1 of the empty word");
    }
    Landscape u = beta1(store, w.front());
    for (std::size_t i = 1; i < w.size(); ++i) {
      u = star(u, beta1(store, w[i]));
    }
    return u;
  }

  std::vector<Landscape> enumerate_uphills(GenStore const& store, GenId g) {
    if (store.height(g) > store.height_cap()) {
      throw Error(Errc::CapExceeded, "peak above the height cap");
    }
    if (g == kUnit) {
      return {Landscape::single(kUnit)};
    }
    std::vector<Landscape> out;
    std::vector<std::pair<GenId, Anchor>> options;
    for (Side s : {Side::L, Side::R}) {
      std::pair<GenId, Anchor> opt{store.entry(g, s), store.anchor(g, s)};
      if (std::find(options.begin(), options.end(), opt) == options.end()) {
        options.push_back(opt);
      }
    }
    for (auto [below, a] : options) {
      for (auto& u : enumerate_uphills(store, below)) {
        u.anchors.push_back(a);
        u.letters.push_back(g);
        out.push_back(std::move(u));
      }
    }
    return out;
  }

  std::vector<Landscape> enumerate_downhills(GenStore const& store, GenId g) {
    auto out = enumerate_uphills(store, g);
    for (auto& u : out) {
      u = reverse(u);
    }
    return out;
  }

  std::vector<Landscape> enumerate_mountains(GenStore const& store, GenId g) {
    if (g == kUnit) {
      return {Landscape::single(kUnit)};
    }
    auto                   ups   = enumerate_uphills(store, g);
    auto                   downs = enumerate_downhills(store, g);
    std::vector<Landscape> out;
    out.reserve(ups.size() * downs.size());
    for (auto const& u : ups) {
      for (auto const& d : downs) {
        out.push_back(star(u, d));
      }
    }
    return out;
  }

  std::string serialize(GenStore const& store, Landscape const& u) {
    return serialize(store, u.as_word());
  }

  nlohmann::json to_json(GenStore const& store, Landscape const& u) {
    nlohmann::json letters = nlohmann::json::array();
    for (auto g : u.letters) {
      letters.push_back({{"term", serialize(store, g)},
                         {"height", store.height(g)}});
    }
    nlohmann::json anchors = nlohmann::json::array();
    for (auto a : u.anchors) {
      anchors.push_back(serialize(store, a));
    }
    return {{"letters", letters}, {"anchors", anchors}};
  }

  Landscape landscape_from_json(GenStore& store, nlohmann::json const& j) {
    try {
      Word w;
      auto const& letters = j.at("letters");
      auto const& anchors = j.at("anchors");
      if (!letters.is_array() || !anchors.is_array()
          || letters.size() != anchors.size() + 1) {
        throw Error(Errc::NotAlternating,
                    "letters must be one more than anchors");
      }
      for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i > 0) {
          w.push_back(Token::anchor(
              parse_anchor(store, anchors[i - 1].get<std::string>())));
        }
        w.push_back(Token::gen(
            parse_gen(store, letters[i].at("term").get<std::string>())));
      }
      return validate_landscape(store, w);
    } catch (nlohmann::json::exception const& e) {
      throw Error(Errc::Syntax, e.what());
    }
  }

}  // namespace weakgen
