#include "weakgen/rewrite.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

namespace weakgen {

  namespace {
    bool is_river(GenStore const& store, Landscape const& u, std::size_t i) {
      if (i == 0 || i + 1 >= u.letters.size()) {
        return false;
      }
      auto h = store.height(u.letters[i]);
      return store.height(u.letters[i - 1]) == h + 1
             && store.height(u.letters[i + 1]) == h + 1;
    }

    bool collapses(Landscape const& u, std::size_t i) {
      return u.letters[i - 1] == u.letters[i + 1]
             && u.anchors[i - 1] == u.anchors[i].inverse();
    }

    TupleSpec uplifted(Landscape const& u, std::size_t i) {
      return {u.letters[i + 1], u.anchors[i].inverse(), u.letters[i],
              u.anchors[i - 1], u.letters[i - 1]};
    }

    Landscape apply_collapse(Landscape const& u, std::size_t i) {
      Landscape v = u;
      v.letters.erase(v.letters.begin() + i, v.letters.begin() + i + 2);
      v.anchors.erase(v.anchors.begin() + (i - 1), v.anchors.begin() + i + 1);
      return v;
    }

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
  }  // namespace

  Landscape uplift_at(GenStore&        store,
                      Landscape const& u,
                      std::size_t      i,
                      UpliftStep*      step) {
    if (!is_river(store, u, i)) {
      throw Error(Errc::NotARiver,
                  "letter " + std::to_string(i) + " is not a river");
    }
    if (collapses(u, i)) {
      if (step != nullptr) {
        *step = {i, UpliftMode::Collapse, kUnit};
      }
      return apply_collapse(u, i);
    }
    GenId h;
    try {
      h = store.tuple(uplifted(u, i));
    } catch (Error const& e) {
      if (e.code() == Errc::CapExceeded) {
        throw;
      }
      throw Error(Errc::InternalInvariantViolation,
                  std::string("uplifted river is not a generator: ")
                      + e.what());
    }
    if (step != nullptr) {
      *step = {i, UpliftMode::Replace, h};
    }
    Landscape v  = u;
    v.letters[i] = h;
    return v;
  }

  Landscape beta2(GenStore&               store,
                  Landscape const&        u,
                  std::vector<Landscape>* trace) {
    if (!is_mountain_range(u)) {
      throw Error(Errc::NotMountainRange,
                  "beta2 needs a landscape starting and ending with 1");
    }
    Landscape v = u;
    if (trace != nullptr) {
      trace->push_back(v);
    }
    while (true) {
      std::size_t best   = 0;
      unsigned    best_h = 0;
      for (std::size_t i = 1; i + 1 < v.letters.size(); ++i) {
        if (is_river(store, v, i)) {
          auto h = store.height(v.letters[i]);
          if (best == 0 || h < best_h) {
            best   = i;
            best_h = h;
          }
        }
      }
      if (best == 0) {
        return v;
      }
      v = uplift_at(store, v, best);
      if (trace != nullptr) {
        trace->push_back(v);
      }
    }
  }

  Landscape beta(GenStore& store, Word const& w) {
    return beta2(store, beta1(store, w));
  }

  bool equivalent(GenStore& store, Word const& u, Word const& v) {
    return beta(store, u) == beta(store, v);
  }

  std::string_view to_string(RelationKind k) noexcept {
    switch (k) {
      case RelationKind::InverseX: return "xx'x=x";
      case RelationKind::InverseXp: return "x'xx'=x'";
      case RelationKind::BaseProduct: return "g_xx'=xx'";
      case RelationKind::LeftUnit: return "1g=g";
      case RelationKind::RightUnit: return "g1=g";
      case RelationKind::Idempotent: return "gg=g";
      case RelationKind::LeftSandwich: return "g^c g^L g=g";
      case RelationKind::RightSandwich: return "g g^R g^c=g";
      case RelationKind::Middle: return "g^R g g^L=g^R g^c g^L";
    }
    return "?";
  }

  std::vector<RelationPair> relations(GenStore& store, unsigned max_height) {
    if (max_height > store.height_cap()) {
      throw Error(Errc::CapExceeded, "relations above the height cap");
    }
    std::vector<RelationPair> out;
    for (LetterId x = 0; x < store.alphabet().size(); ++x) {
      Token tx  = Token::anchor(Anchor::plain(x));
      Token txp = Token::anchor(Anchor::primed(x));
      out.push_back({{tx, txp, tx}, {tx}, RelationKind::InverseX});
      out.push_back({{txp, tx, txp}, {txp}, RelationKind::InverseXp});
      GenId b = store.base(x);
      out.push_back({{Token::gen(b)}, {tx, txp}, RelationKind::BaseProduct, b});
    }
    std::vector<GenId> gens{kUnit};
    if (max_height >= 1) {
      auto all = enumerate_up_to(store, max_height);
      gens.insert(gens.end(), all.begin(), all.end());
    }
    Token const one = Token::anchor(Anchor::one());
    for (GenId g : gens) {
      Token tg = letter_token(g);
      out.push_back({{one, tg}, {tg}, RelationKind::LeftUnit, g});
      out.push_back({{tg, one}, {tg}, RelationKind::RightUnit, g});
      out.push_back({{tg, tg}, {tg}, RelationKind::Idempotent, g});
    }
    for (GenId g : gens) {
      if (store.height(g) < 2) {
        continue;
      }
      Word w  = {Token::gen(g)};
      Word c  = {letter_token(store.middle(g))};
      Word gl = gL_word(store, g);
      Word gr = gR_word(store, g);
      out.push_back({cat({c, gl, w}), w, RelationKind::LeftSandwich, g});
      out.push_back({cat({w, gr, c}), w, RelationKind::RightSandwich, g});
      out.push_back({cat({gr, w, gl}), cat({gr, c, gl}), RelationKind::Middle, g});
    }
    return out;
  }

  std::string_view to_string(Reach r) noexcept {
    switch (r) {
      case Reach::Yes: return "Yes";
      case Reach::No: return "No";
      default: return "Unknown";
    }
  }

  std::string_view to_string(GorgeResult r) noexcept {
    switch (r) {
      case GorgeResult::Gorge: return "Gorge";
      case GorgeResult::NotGorge: return "NotGorge";
      default: return "Unknown";
    }
  }

  namespace {
    // Letters of s not covered by the longest common prefix and suffix with
    // the target. Zero iff s == target when lengths agree.
    std::size_t mismatch(Landscape const& s, Landscape const& t) {
      std::size_t const n = s.letters.size(), m = t.letters.size();
      std::size_t       p = 0;
      while (p < n && p < m && s.letters[p] == t.letters[p]
             && (p == 0 || s.anchors[p - 1] == t.anchors[p - 1])) {
        ++p;
      }
      std::size_t q = 0;
      while (q < n - p && q < m && s.letters[n - 1 - q] == t.letters[m - 1 - q]
             && (q == 0 || s.anchors[n - 1 - q] == t.anchors[m - 1 - q])) {
        ++q;
      }
      return n - p - q;
    }
  }  // namespace

  Reach reduces_to(GenStore&        store,
                   Landscape const& u,
                   Landscape const& target,
                   SearchBounds     bounds) {
    if (u == target) {
      return Reach::Yes;
    }
    // Uplifting never changes the end letters and never makes a landscape
    // longer.
    if (u.first() != target.first() || u.last() != target.last()
        || u.length() < target.length()) {
      return Reach::No;
    }
    unsigned const cap = std::min(bounds.height_cap.value_or(store.height_cap()),
                                  store.height_cap());

    struct Item {
      std::size_t score;
      std::size_t order;
      Landscape   state;
    };
    auto worse = [](Item const& a, Item const& b) {
      return a.score != b.score ? a.score > b.score : a.order > b.order;
    };
    std::priority_queue<Item, std::vector<Item>, decltype(worse)> open(worse);
    std::unordered_set<Landscape, LandscapeHash> seen{u};
    std::size_t order     = 0;
    bool        truncated = false;
    open.push({mismatch(u, target), order++, u});

    while (!open.empty()) {
      Landscape s = open.top().state;
      open.pop();
      for (auto i : rivers(store, s)) {
        Landscape v;
        if (collapses(s, i)) {
          v = apply_collapse(s, i);
        } else {
          if (store.height(s.letters[i + 1]) + 1 > cap) {
            truncated = true;
            continue;
          }
          try {
            v = uplift_at(store, s, i);
          } catch (Error const& e) {
            if (e.code() != Errc::CapExceeded) {
              throw;
            }
            truncated = true;
            continue;
          }
        }
        if (v == target) {
          return Reach::Yes;
        }
        if (v.length() < target.length() || !seen.insert(v).second) {
          continue;
        }
        if (seen.size() > bounds.max_states) {
          return Reach::Unknown;
        }
        open.push({mismatch(v, target), order++, std::move(v)});
      }
    }
    return truncated ? Reach::Unknown : Reach::No;
  }

  GorgeResult is_gorge(GenStore&                   store,
                       Landscape const&            w,
                       std::optional<SearchBounds> bounds) {
    if (w.is_single()) {
      return GorgeResult::Gorge;
    }
    if (classify(store, w) != ShapeClass::Canyon) {
      throw Error(Errc::NotACanyon,
                  "is_gorge needs a valley with equal end letters");
    }
    SearchBounds b;
    if (bounds) {
      b = *bounds;
    } else {
      b.height_cap = store.height(w.first()) + 2;
    }
    switch (reduces_to(store, w, Landscape::single(w.first()), b)) {
      case Reach::Yes: return GorgeResult::Gorge;
      case Reach::No: return GorgeResult::NotGorge;
      default: return GorgeResult::Unknown;
    }
  }

}  // namespace weakgen
