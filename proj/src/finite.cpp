#include "weakgen/finite.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace weakgen {

  namespace {
    std::optional<Elem> scan_identity(std::size_t m,
                                      std::vector<Elem> const& t) {
      for (Elem e = 0; e < m; ++e) {
        bool ok = true;
        for (Elem a = 0; a < m && ok; ++a) {
          ok = t[e * m + a] == a && t[a * m + e] == a;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }

    std::uint64_t splitmix(std::uint64_t z) {
      z += 0x9e3779b97f4a7c15ULL;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      return z ^ (z >> 31);
    }

    std::uint64_t fnv1a(std::string const& s) {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (unsigned char c : s) {
        h = (h ^ c) * 0x100000001b3ULL;
      }
      return h;
    }
  }  // namespace

  FiniteSemigroup::FiniteSemigroup(std::size_t         size,
                                   std::vector<Elem>   table,
                                   std::optional<Elem> identity)
      : _size(size), _table(std::move(table)) {
    if (size == 0) {
      throw Error(Errc::BadShape, "a semigroup needs at least one element");
    }
    if (_table.size() != size * size) {
      throw Error(Errc::BadShape, "table is not " + std::to_string(size) + "x"
                                      + std::to_string(size));
    }
    for (Elem v : _table) {
      if (v >= size) {
        throw Error(Errc::BadShape,
                    "table entry " + std::to_string(v) + " out of range");
      }
    }
    for (Elem a = 0; a < size; ++a) {
      for (Elem b = 0; b < size; ++b) {
        Elem ab = mul(a, b);
        for (Elem c = 0; c < size; ++c) {
          if (mul(ab, c) != mul(a, mul(b, c))) {
            throw Error(Errc::NotAssociative,
                        "(" + std::to_string(a) + std::to_string(b) + ")"
                            + std::to_string(c) + " differs");
          }
        }
      }
    }
    if (identity) {
      if (*identity >= size) {
        throw Error(Errc::BadShape, "identity out of range");
      }
      for (Elem a = 0; a < size; ++a) {
        if (mul(*identity, a) != a || mul(a, *identity) != a) {
          throw Error(Errc::BadShape, "declared identity "
                                          + std::to_string(*identity)
                                          + " is not an identity");
        }
      }
      _identity = identity;
    } else {
      _identity = scan_identity(size, _table);
    }
  }

  FiniteSemigroup FiniteSemigroup::from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("table")
        || !j["size"].is_number_unsigned() || !j["table"].is_array()) {
      throw Error(Errc::BadShape, "expected {\"size\", \"table\"}");
    }
    std::size_t const m = j["size"].get<std::size_t>();
    auto const&       t = j["table"];
    if (t.size() != m) {
      throw Error(Errc::BadShape, "table has " + std::to_string(t.size())
                                      + " rows, expected " + std::to_string(m));
    }
    std::vector<Elem> flat;
    flat.reserve(m * m);
    for (auto const& row : t) {
      if (!row.is_array() || row.size() != m) {
        throw Error(Errc::BadShape, "every row needs " + std::to_string(m)
                                        + " entries");
      }
      for (auto const& v : row) {
        if (!v.is_number_unsigned()) {
          throw Error(Errc::BadShape, "entries are element ids");
        }
        flat.push_back(v.get<Elem>());
      }
    }
    std::optional<Elem> id;
    if (j.contains("identity") && !j["identity"].is_null()) {
      if (!j["identity"].is_number_unsigned()) {
        throw Error(Errc::BadShape, "identity is an element id or null");
      }
      id = j["identity"].get<Elem>();
    }
    return FiniteSemigroup(m, std::move(flat), id);
  }

  nlohmann::json FiniteSemigroup::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (Elem a = 0; a < _size; ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (Elem b = 0; b < _size; ++b) {
        row.push_back(mul(a, b));
      }
      rows.push_back(std::move(row));
    }
    return {{"size", _size},
            {"table", std::move(rows)},
            {"identity", _identity ? nlohmann::json(*_identity)
                                   : nlohmann::json(nullptr)}};
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s) {
    if (s.identity()) {
      return s;
    }
    std::size_t const m = s.size(), n = m + 1;
    std::vector<Elem> t(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        t[a * n + b] = a == m ? b : b == m ? a : s.mul(a, b);
      }
    }
    return FiniteSemigroup(n, std::move(t), Elem(m));
  }

  std::vector<Elem> idempotents(FiniteSemigroup const& s) {
    std::vector<Elem> out;
    for (Elem a = 0; a < s.size(); ++a) {
      if (s.is_idempotent(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::vector<Elem> inverses_of(FiniteSemigroup const& s, Elem a) {
    std::vector<Elem> out;
    for (Elem b = 0; b < s.size(); ++b) {
      if (s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b) {
        out.push_back(b);
      }
    }
    return out;
  }

  bool is_regular(FiniteSemigroup const& s) {
    for (Elem a = 0; a < s.size(); ++a) {
      bool found = false;
      for (Elem b = 0; b < s.size() && !found; ++b) {
        found = s.mul(s.mul(a, b), a) == a;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  std::vector<Elem> sandwich_finite(FiniteSemigroup const& s, Elem e, Elem f) {
    if (!s.is_idempotent(e) || !s.is_idempotent(f)) {
      throw Error(Errc::NotIdempotent, "sandwich sets need idempotents");
    }
    Elem const        ef = s.mul(e, f);
    std::vector<Elem> out;
    for (Elem g : idempotents(s)) {
      if (s.mul(f, g) == g && s.mul(g, e) == g
          && s.mul(s.mul(e, g), f) == ef) {
        out.push_back(g);
      }
    }
    return out;
  }

  Elem transformation_id(std::vector<unsigned> const& images) {
    Elem id = 0, p = 1;
    for (unsigned v : images) {
      if (v >= images.size()) {
        throw Error(Errc::BadArgument, "image out of range");
      }
      id += v * p;
      p *= Elem(images.size());
    }
    return id;
  }

  std::vector<unsigned> transformation_images(unsigned n, Elem id) {
    std::vector<unsigned> f(n);
    for (unsigned i = 0; i < n; ++i) {
      f[i] = id % n;
      id /= n;
    }
    return f;
  }

  FiniteSemigroup full_transformation_monoid(unsigned n) {
    if (n == 0) {
      throw Error(Errc::BadArgument, "T_0 is not supported");
    }
    if (n > 4) {
      throw Error(Errc::TooLarge, "T_n is limited to n <= 4");
    }
    std::size_t m = 1;
    for (unsigned i = 0; i < n; ++i) {
      m *= n;
    }
    std::vector<Elem> t(m * m);
    std::vector<unsigned> ab(n);
    for (Elem a = 0; a < m; ++a) {
      auto fa = transformation_images(n, a);
      for (Elem b = 0; b < m; ++b) {
        auto fb = transformation_images(n, b);
        for (unsigned i = 0; i < n; ++i) {
          ab[i] = fb[fa[i]];
        }
        t[a * m + b] = transformation_id(ab);
      }
    }
    std::vector<unsigned> id(n);
    for (unsigned i = 0; i < n; ++i) {
      id[i] = i;
    }
    return FiniteSemigroup(m, std::move(t), transformation_id(id));
  }

  SkeletonMap::SkeletonMap(GenStore&              store,
                           FiniteSemigroup const& s,
                           std::vector<Elem>      x_images,
                           ChoiceStrategy         strategy,
                           unsigned               max_height)
      : _store(store),
        _target(adjoin_identity(s)),
        _one(*_target.identity()),
        _x(std::move(x_images)),
        _strategy(strategy),
        _max_height(max_height) {
    if (_x.size() != store.alphabet().size()) {
      throw Error(Errc::BadArgument,
                  "need an image for every letter of the alphabet");
    }
    for (LetterId x = 0; x < _x.size(); ++x) {
      if (_x[x] >= s.size()) {
        throw Error(Errc::BadArgument, "image of '" + store.alphabet().name(x)
                                           + "' out of range");
      }
      auto inv = inverses_of(_target, _x[x]);
      if (inv.empty()) {
        throw Error(Errc::NotRegular, "image of '" + store.alphabet().name(x)
                                          + "' has no inverse");
      }
      _xp.push_back(choose(inv, store.alphabet().name(x) + "'"));
    }
  }

  Elem SkeletonMap::choose(std::vector<Elem> const& options,
                           std::string const&       key) const {
    if (_strategy.kind == ChoiceStrategy::Kind::First) {
      return options.front();
    }
    // Keyed by term, so the choice does not depend on evaluation order.
    std::uint64_t h = splitmix(_strategy.seed ^ fnv1a(key));
    return options[h % options.size()];
  }

  Elem SkeletonMap::image(Anchor a) {
    switch (a.kind) {
      case Anchor::Kind::One: return _one;
      case Anchor::Kind::Plain: return _x.at(a.letter);
      default: return _xp.at(a.letter);
    }
  }

  Elem SkeletonMap::phi_l(GenId g) {
    Anchor la = _store.anchor(g, Side::L);
    Elem   c  = image(_store.middle(g));
    Elem   p  = _target.mul(c, image(la.inverse()));
    p         = _target.mul(p, image(_store.entry(g, Side::L)));
    return _target.mul(p, image(la));
  }

  Elem SkeletonMap::phi_r(GenId g) {
    Anchor ra = _store.anchor(g, Side::R);
    Elem   p  = _target.mul(image(ra.inverse()), image(_store.entry(g, Side::R)));
    p         = _target.mul(p, image(ra));
    return _target.mul(p, image(_store.middle(g)));
  }

  Elem SkeletonMap::image(GenId g) {
    if (g == kUnit) {
      return _one;
    }
    std::lock_guard lock(_mtx);
    if (auto it = _memo.find(g); it != _memo.end()) {
      return it->second;
    }
    auto const& node = _store.node(g);
    if (node.height > _max_height) {
      throw Error(Errc::CapExceeded, "generator of height "
                                         + std::to_string(node.height)
                                         + " is above the skeleton height");
    }
    Elem v;
    if (node.kind == GenKind::BaseE) {
      v = _target.mul(_x.at(node.letter), _xp.at(node.letter));
    } else {
      Elem l = phi_l(g), r = phi_r(g);
      if (!_target.is_idempotent(l) || !_target.is_idempotent(r)) {
        throw Error(Errc::InternalInvariantViolation,
                    "g^{phi,l} or g^{phi,r} is not idempotent");
      }
      auto opts = sandwich_finite(_target, r, l);
      if (opts.empty()) {
        throw Error(Errc::EmptySandwich,
                    "empty sandwich set for " + serialize(_store, g));
      }
      v = choose(opts, serialize(_store, g));
    }
    _memo.emplace(g, v);
    return v;
  }

  std::vector<std::pair<GenId, Elem>> SkeletonMap::memo() const {
    std::lock_guard lock(_mtx);
    std::vector<std::pair<GenId, Elem>> out(_memo.begin(), _memo.end());
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.first.value < b.first.value;
    });
    return out;
  }

  SkeletonMap build_skeleton(GenStore&              store,
                             FiniteSemigroup const& s,
                             std::vector<Elem>      x_images,
                             ChoiceStrategy         strategy,
                             unsigned               max_height) {
    if (!is_regular(s)) {
      throw Error(Errc::NotRegular, "target semigroup is not regular");
    }
    return SkeletonMap(store, s, std::move(x_images), strategy, max_height);
  }

  Elem phi_hat(SkeletonMap& sk, Word const& w) {
    Elem p = sk.one();
    for (auto const& t : w) {
      p = sk.target().mul(p, sk.image(t));
    }
    return p;
  }

  std::vector<Elem> closure(FiniteSemigroup const&   s,
                            std::vector<Elem> const& gens) {
    std::vector<bool> in(s.size(), false);
    std::vector<Elem> list;
    for (Elem g : gens) {
      if (!in[g]) {
        in[g] = true;
        list.push_back(g);
      }
    }
    std::vector<Elem> const base = list;
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (Elem g : base) {
        Elem p = s.mul(list[i], g);
        if (!in[p]) {
          in[p] = true;
          list.push_back(p);
        }
      }
    }
    std::sort(list.begin(), list.end());
    return list;
  }

  bool is_regular_subset(FiniteSemigroup const&   s,
                         std::vector<Elem> const& subset) {
    for (Elem a : subset) {
      bool found = std::any_of(subset.begin(), subset.end(), [&](Elem b) {
        return s.mul(s.mul(a, b), a) == a && s.mul(s.mul(b, a), b) == b;
      });
      if (!found) {
        return false;
      }
    }
    return true;
  }

  ClosureReport image_closure(SkeletonMap& sk, unsigned max_height) {
    GenStore&         store = sk.store();
    std::vector<Elem> gens{sk.one()};
    for (LetterId x = 0; x < store.alphabet().size(); ++x) {
      gens.push_back(sk.image(Anchor::plain(x)));
      gens.push_back(sk.image(Anchor::primed(x)));
    }
    if (max_height >= 1) {
      for (GenId g : enumerate_up_to(store, max_height)) {
        gens.push_back(sk.image(g));
      }
    }
    ClosureReport r;
    auto const&   t = sk.target();
    r.elements      = closure(t, gens);
    r.regular       = is_regular_subset(t, r.elements);
    r.one_phi_is_identity =
        std::all_of(r.elements.begin(), r.elements.end(), [&](Elem a) {
          return t.mul(sk.one(), a) == a && t.mul(a, sk.one()) == a;
        });
    return r;
  }

  std::string_view to_string(ProbeResult::Kind k) noexcept {
    switch (k) {
      case ProbeResult::Kind::LooksMinimal: return "LooksMinimal";
      case ProbeResult::Kind::FoundProper: return "FoundProper";
      default: return "Unknown";
    }
  }

  ProbeResult weakly_generated_probe(FiniteSemigroup const&   s,
                                     std::vector<Elem> const& x_images,
                                     std::size_t              budget) {
    if (!is_regular(s)) {
      throw Error(Errc::NotRegular, "target semigroup is not regular");
    }
    for (Elem x : x_images) {
      if (x >= s.size()) {
        throw Error(Errc::BadArgument, "image out of range");
      }
    }
    std::size_t const m = s.size();
    ProbeResult       r;

    if (m <= 12) {
      std::uint32_t xmask = 0;
      for (Elem x : x_images) {
        xmask |= 1u << x;
      }
      std::uint32_t const full = (1u << m) - 1;
      std::uint32_t best = full;
      for (std::uint32_t mask = 1; mask < full; ++mask) {
        if ((mask & xmask) != xmask
            || (best != full && std::popcount(mask) >= std::popcount(best))) {
          continue;
        }
        std::vector<Elem> sub;
        for (Elem a = 0; a < m; ++a) {
          if (mask >> a & 1u) {
            sub.push_back(a);
          }
        }
        bool closed = true;
        for (Elem a : sub) {
          for (Elem b : sub) {
            if (!(mask >> s.mul(a, b) & 1u)) {
              closed = false;
              break;
            }
          }
          if (!closed) {
            break;
          }
        }
        if (closed && is_regular_subset(s, sub)) {
          best     = mask;
          r.subset = std::move(sub);
        }
      }
      r.kind = best == full ? ProbeResult::Kind::LooksMinimal
                            : ProbeResult::Kind::FoundProper;
      return r;
    }

    std::set<Elem>    xs(x_images.begin(), x_images.end());
    std::vector<Elem> current(m);
    for (Elem a = 0; a < m; ++a) {
      current[a] = a;
    }
    std::size_t attempts  = 0;
    bool        exhausted = false;
    for (bool changed = true; changed && !exhausted;) {
      changed = false;
      for (Elem e : current) {
        if (xs.count(e) != 0) {
          continue;
        }
        if (attempts++ >= budget) {
          exhausted = true;
          break;
        }
        std::vector<Elem> rest;
        std::copy_if(current.begin(), current.end(), std::back_inserter(rest),
                     [e](Elem a) { return a != e; });
        auto t = closure(s, rest);
        if (!std::binary_search(t.begin(), t.end(), e)
            && is_regular_subset(s, t)) {
          current = std::move(t);
          changed = true;
          break;
        }
      }
    }
    if (current.size() < m) {
      r.kind   = ProbeResult::Kind::FoundProper;
      r.subset = std::move(current);
    }
    return r;
  }

  nlohmann::json skeleton_report(SkeletonMap& sk, unsigned max_height) {
    GenStore&      store = sk.store();
    auto const&    t     = sk.target();
    nlohmann::json anchors = nlohmann::json::object();
    anchors["1"]           = sk.one();
    bool inverse_ok        = true;
    for (LetterId x = 0; x < store.alphabet().size(); ++x) {
      Elem a = sk.image(Anchor::plain(x)), b = sk.image(Anchor::primed(x));
      anchors[serialize(store, Anchor::plain(x))]  = a;
      anchors[serialize(store, Anchor::primed(x))] = b;
      inverse_ok = inverse_ok && t.mul(t.mul(a, b), a) == a
                   && t.mul(t.mul(b, a), b) == b;
    }
    bool           sides_ok = true;
    nlohmann::json levels   = nlohmann::json::array();
    for (unsigned h = 1; h <= max_height; ++h) {
      nlohmann::json gens = nlohmann::json::array();
      for (GenId g : enumerate(store, h, KindFilter::All)) {
        gens.push_back({{"term", serialize(store, g)},
                        {"kind", store.is_e(g) ? "E" : "D"},
                        {"image", sk.image(g)}});
        if (h >= 2) {
          sides_ok = sides_ok && t.is_idempotent(sk.phi_l(g))
                     && t.is_idempotent(sk.phi_r(g));
        }
      }
      levels.push_back({{"height", h}, {"generators", std::move(gens)}});
    }
    auto c = image_closure(sk, max_height);
    return {{"strategy", sk.strategy().kind == ChoiceStrategy::Kind::First
                             ? "first"
                             : "seeded"},
            {"seed", sk.strategy().seed},
            {"target_size", t.size()},
            {"identity", sk.one()},
            {"anchors", std::move(anchors)},
            {"levels", std::move(levels)},
            {"closure",
             {{"elements", c.elements}, {"size", c.elements.size()}}},
            {"checks",
             {{"primed_images_are_inverses", inverse_ok},
              {"side_images_idempotent", sides_ok},
              {"closure_regular", c.regular},
              {"one_phi_is_identity", c.one_phi_is_identity},
              {"all_pass",
               inverse_ok && sides_ok && c.regular && c.one_phi_is_identity}}}};
  }

}  // namespace weakgen
