#include "weakgen/model.hpp"

#include <algorithm>

namespace weakgen {

  Mountain Mountain::from(GenStore const& store, Landscape u) {
    if (!is_mountain(store, u)) {
      throw Error(Errc::NotMountain, "'" + weakgen::serialize(store, u)
                                         + "' is not a mountain");
    }
    Mountain m;
    m._u = std::move(u);
    for (std::size_t i = 0; i < m._u.letters.size(); ++i) {
      if (store.height(m._u.letters[i])
          > store.height(m._u.letters[m._peak])) {
        m._peak = i;
      }
    }
    return m;
  }

  Mountain Mountain::of_word(GenStore& store, Word const& w) {
    return from(store, beta(store, w));
  }

  Landscape Mountain::left_hill() const {
    Landscape h;
    h.letters.assign(_u.letters.begin(), _u.letters.begin() + _peak + 1);
    h.anchors.assign(_u.anchors.begin(), _u.anchors.begin() + _peak);
    return h;
  }

  Landscape Mountain::right_hill() const {
    Landscape h;
    h.letters.assign(_u.letters.begin() + _peak, _u.letters.end());
    h.anchors.assign(_u.anchors.begin() + _peak, _u.anchors.end());
    return h;
  }

  std::string_view to_string(Green g) noexcept {
    switch (g) {
      case Green::R: return "R";
      case Green::L: return "L";
      case Green::J: return "J";
      case Green::H: return "H";
      case Green::D: return "D";
      case Green::LeqR: return "leqR";
      case Green::LeqL: return "leqL";
      case Green::LeqJ: return "leqJ";
    }
    return "?";
  }

  Green green_from_string(std::string_view s) {
    for (Green g : {Green::R, Green::L, Green::J, Green::H, Green::D,
                    Green::LeqR, Green::LeqL, Green::LeqJ}) {
      if (to_string(g) == s) {
        return g;
      }
    }
    throw Error(Errc::BadArgument, "unknown relation '" + std::string(s) + "'");
  }

  std::string_view to_string(Tri t) noexcept {
    switch (t) {
      case Tri::True: return "true";
      case Tri::False: return "false";
      default: return "unknown";
    }
  }

  namespace {
    // p is a prefix of u as token sequences
    bool is_prefix(Landscape const& p, Landscape const& u) {
      std::size_t k = p.letters.size();
      return k <= u.letters.size()
             && std::equal(p.letters.begin(), p.letters.end(), u.letters.begin())
             && std::equal(p.anchors.begin(), p.anchors.end(), u.anchors.begin());
    }

    bool is_suffix(Landscape const& s, Landscape const& u) {
      std::size_t k = s.letters.size();
      return k <= u.letters.size()
             && std::equal(s.letters.rbegin(), s.letters.rend(),
                           u.letters.rbegin())
             && std::equal(s.anchors.rbegin(), s.anchors.rend(),
                           u.anchors.rbegin());
    }
  }  // namespace

  Mountain Model::parse(std::string_view word_text) const {
    return Mountain::of_word(_store, parse_word(_store, word_text));
  }

  std::string Model::serialize(Mountain const& u) const {
    return weakgen::serialize(_store, u.landscape());
  }

  Mountain Model::mul(Mountain const& u, Mountain const& v) const {
    return Mountain::from(_store,
                          beta2(_store, star(u.landscape(), v.landscape())));
  }

  bool Model::green(Green rel, Mountain const& u, Mountain const& v) const {
    switch (rel) {
      case Green::LeqR: return is_prefix(v.left_hill(), u.left_hill());
      case Green::LeqL: return is_suffix(v.right_hill(), u.right_hill());
      case Green::LeqJ: return preceq(_store, v.peak(), u.peak());
      case Green::R: return u.left_hill() == v.left_hill();
      case Green::L: return u.right_hill() == v.right_hill();
      case Green::J:
      case Green::D: return u.peak() == v.peak();
      case Green::H: return u == v;
    }
    return false;
  }

  bool Model::is_idempotent(Mountain const& u) const {
    return mul(u, u) == u;
  }

  std::vector<Mountain> Model::sorted(std::vector<Mountain> v) const {
    std::vector<std::pair<std::string, Mountain>> keyed;
    keyed.reserve(v.size());
    for (auto& m : v) {
      keyed.emplace_back(serialize(m), std::move(m));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](auto const& a, auto const& b) { return a.first < b.first; });
    v.clear();
    for (auto& [k, m] : keyed) {
      v.push_back(std::move(m));
    }
    return v;
  }

  std::vector<Mountain> const& Model::mountains_with_peak(GenId g) {
    auto it = _by_peak.find(g);
    if (it == _by_peak.end()) {
      std::vector<Mountain> ms;
      for (auto& u : enumerate_mountains(_store, g)) {
        ms.push_back(Mountain::from(_store, std::move(u)));
      }
      it = _by_peak.emplace(g, sorted(std::move(ms))).first;
    }
    return it->second;
  }

  std::vector<Mountain> Model::inverses(Mountain const& u) {
    // Mutually inverse elements are D-related, and D-classes are the sets of
    // mountains sharing a peak.
    std::vector<Mountain> out;
    for (auto const& v : mountains_with_peak(u.peak())) {
      if (mul(u, v, u) == u && mul(v, u, v) == v) {
        out.push_back(v);
      }
    }
    return out;
  }

  std::vector<Mountain> Model::sandwich_set(Mountain const& e,
                                            Mountain const& f) {
    if (!is_idempotent(e) || !is_idempotent(f)) {
      throw Error(Errc::NotIdempotent, "sandwich sets need idempotents");
    }
    std::vector<Mountain> out;
    for (auto const& h : inverses(mul(e, f))) {
      if (mul(f, h) == h && mul(h, e) == h) {
        out.push_back(h);
      }
    }
    return out;
  }

  bool Model::natural_leq(Mountain const& v, Mountain const& u) {
    if (v == u) {
      return true;
    }
    // v = e u = u f with e = v v', f = v'' v idempotent.
    auto inv   = inverses(v);
    bool left  = std::any_of(inv.begin(), inv.end(), [&](Mountain const& w) {
      return mul(v, w, u) == v;
    });
    if (!left) {
      return false;
    }
    return std::any_of(inv.begin(), inv.end(), [&](Mountain const& w) {
      return mul(u, w, v) == v;
    });
  }

  Tri Model::natural_leq_gorge(Mountain const& v,
                               Mountain const& u,
                               SearchBounds    bounds) {
    if (v == u) {
      return Tri::True;
    }
    Landscape lv = v.left_hill(), lu = u.left_hill();
    Landscape rv = v.right_hill(), ru = u.right_hill();
    // lambda_l(v) = lambda_l(u) a1 u1 and lambda_r(v) = u2 a2 lambda_r(u)
    if (lv.letters.size() <= lu.letters.size() || !is_prefix(lu, lv)
        || rv.letters.size() <= ru.letters.size() || !is_suffix(ru, rv)) {
      return Tri::False;
    }
    // w = u2 a2 kappa(u) a1 u1
    std::size_t const cut = rv.letters.size() - ru.letters.size();
    Landscape         w;
    w.letters.assign(rv.letters.begin(), rv.letters.begin() + cut + 1);
    w.anchors.assign(rv.anchors.begin(), rv.anchors.begin() + cut);
    std::size_t const from = lu.letters.size() - 1;
    w.letters.insert(w.letters.end(), lv.letters.begin() + from + 1,
                     lv.letters.end());
    w.anchors.insert(w.anchors.end(), lv.anchors.begin() + from,
                     lv.anchors.end());
    if (!bounds.height_cap) {
      bounds.height_cap = _store.height(w.first()) + 2;
    }
    switch (is_gorge(_store, w, bounds)) {
      case GorgeResult::Gorge: return Tri::True;
      case GorgeResult::NotGorge: return Tri::False;
      default: return Tri::Unknown;
    }
  }

  GorgeResult Model::idempotent_by_gorge(Mountain const& u) const {
    if (u.is_trivial()) {
      return GorgeResult::Gorge;
    }
    return is_gorge(_store, star(u.right_hill(), u.left_hill()));
  }

  std::vector<Mountain> Model::dclass(Mountain const& u) {
    return mountains_with_peak(u.peak());
  }

  std::vector<Mountain> Model::rclass(Mountain const& u) {
    std::vector<Mountain> out;
    for (auto const& v : mountains_with_peak(u.peak())) {
      if (green(Green::R, u, v)) {
        out.push_back(v);
      }
    }
    return out;
  }

  std::vector<Mountain> Model::lclass(Mountain const& u) {
    std::vector<Mountain> out;
    for (auto const& v : mountains_with_peak(u.peak())) {
      if (green(Green::L, u, v)) {
        out.push_back(v);
      }
    }
    return out;
  }

  ClassSizes Model::class_sizes(GenId g) {
    Mountain m = Mountain::of_word(_store, {Token::gen(g)});
    return {rclass(m).size(), lclass(m).size(), dclass(m).size()};
  }

}  // namespace weakgen
