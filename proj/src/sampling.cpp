#include "weakgen/sampling.hpp"

#include <algorithm>
#include <tuple>

namespace weakgen {

  namespace {
    template <typename T>
    T const& pick(Rng& rng, std::vector<T> const& v) {
      return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    }
  }  // namespace

  Sampler::Sampler(GenStore& store, unsigned max_height)
      : _store(store), _max_height(max_height) {
    if (max_height == 0) {
      throw Error(Errc::BadArgument, "sampling needs max height >= 1");
    }
    _levels.resize(max_height + 1);
    for (unsigned h = 1; h <= max_height; ++h) {
      _levels[h] = enumerate(store, h, KindFilter::All);
    }
    // Walk steps g -a-> h: h one level up with g as an entry (left-anchored),
    // or one level down to an entry of g (right-anchored).
    for (unsigned h = 1; h <= max_height; ++h) {
      for (GenId g : _levels[h]) {
        for (Side s : {Side::L, Side::R}) {
          GenId  e = store.entry(g, s);
          Anchor a = store.anchor(g, s);
          _moves[e].push_back({a, g});
          _moves[g].push_back({a.inverse(), e});
        }
      }
    }
    for (auto& [g, steps] : _moves) {
      std::sort(steps.begin(), steps.end(), [](Step const& p, Step const& q) {
        return std::tie(p.to.value, p.a) < std::tie(q.to.value, q.a);
      });
      steps.erase(std::unique(steps.begin(), steps.end(),
                              [](Step const& p, Step const& q) {
                                return p.to == q.to && p.a == q.a;
                              }),
                  steps.end());
    }
  }

  GenId Sampler::random_gen(Rng& rng, bool with_unit) const {
    unsigned h = std::uniform_int_distribution<unsigned>(with_unit ? 0 : 1,
                                                         _max_height)(rng);
    return h == 0 ? kUnit : pick(rng, _levels[h]);
  }

  Anchor Sampler::random_anchor(Rng& rng) const {
    auto n = _store.alphabet().size();
    auto k = std::uniform_int_distribution<std::size_t>(0, 2 * n)(rng);
    if (k == 2 * n) {
      return Anchor::one();
    }
    return k % 2 == 0 ? Anchor::plain(LetterId(k / 2))
                      : Anchor::primed(LetterId(k / 2));
  }

  Word Sampler::random_word(Rng& rng, std::size_t length) const {
    Word w;
    for (std::size_t i = 0; i < length; ++i) {
      if (std::bernoulli_distribution(0.5)(rng)) {
        w.push_back(Token::anchor(random_anchor(rng)));
      } else {
        w.push_back(Token::gen(random_gen(rng)));
      }
    }
    return w;
  }

  Landscape Sampler::random_mountain_range(Rng& rng,
                                           std::size_t max_tokens) const {
    auto n = std::uniform_int_distribution<std::size_t>(1, max_tokens)(rng);
    return beta1(_store, random_word(rng, n));
  }

  Landscape Sampler::random_mountain(Rng& rng) const {
    GenId g = random_gen(rng, true);
    if (g == kUnit) {
      return Landscape{};
    }
    auto up   = enumerate_uphills(_store, g);
    auto down = enumerate_downhills(_store, g);
    return star(pick(rng, up), pick(rng, down));
  }

  Landscape Sampler::random_downhill(Rng& rng) const {
    return pick(rng, enumerate_downhills(_store, random_gen(rng)));
  }

  Landscape Sampler::random_landscape(Rng& rng, std::size_t letters) const {
    Landscape u = Landscape::single(random_gen(rng, true));
    while (u.letters.size() < letters) {
      auto it = _moves.find(u.last());
      if (it == _moves.end() || it->second.empty()) {
        break;
      }
      Step const& s = pick(rng, it->second);
      u.anchors.push_back(s.a);
      u.letters.push_back(s.to);
    }
    return u;
  }

  std::pair<Word, Word> Sampler::random_equivalent_pair(
      Rng&                             rng,
      std::vector<RelationPair> const& rel,
      std::size_t                      pieces) const {
    Word u, v;
    for (std::size_t i = 0; i < pieces; ++i) {
      if (rel.empty() || std::bernoulli_distribution(0.5)(rng)) {
        Word t = random_word(rng, 1);
        u.insert(u.end(), t.begin(), t.end());
        v.insert(v.end(), t.begin(), t.end());
        continue;
      }
      auto const& p    = pick(rng, rel);
      bool        flip = std::bernoulli_distribution(0.5)(rng);
      Word const& l    = flip ? p.rhs : p.lhs;
      Word const& r    = flip ? p.lhs : p.rhs;
      u.insert(u.end(), l.begin(), l.end());
      v.insert(v.end(), r.begin(), r.end());
    }
    if (u.empty()) {
      u = v = {Token::anchor(Anchor::one())};
    }
    return {std::move(u), std::move(v)};
  }

  Landscape reduce_randomly(GenStore& store, Landscape u, Rng& rng) {
    if (!is_mountain_range(u)) {
      throw Error(Errc::NotMountainRange, "random reduction needs 1 ... 1");
    }
    for (auto rs = rivers(store, u); !rs.empty(); rs = rivers(store, u)) {
      u = uplift_at(store, u, pick(rng, rs));
    }
    return u;
  }

}  // namespace weakgen
