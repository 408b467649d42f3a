#include "weakgen/terms.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace weakgen {

  std::string_view to_string(Errc e) noexcept {
    switch (e) {
      case Errc::Syntax: return "SyntaxError";
      case Errc::UnknownLetter: return "UnknownLetter";
      case Errc::HeightMismatch: return "HeightMismatch";
      case Errc::NoAnchorMatch: return "NoAnchorMatch";
      case Errc::EqualEntriesBadAnchors: return "EqualEntriesBadAnchors";
      case Errc::AmbiguousSide: return "AmbiguousSide";
      case Errc::HeightTooSmall: return "HeightTooSmall";
      case Errc::NotAlternating: return "NotAlternating";
      case Errc::TripletNotAnchored: return "TripletNotAnchored";
      case Errc::JunctionMismatch: return "JunctionMismatch";
      case Errc::KappaNotUnique: return "KappaNotUnique";
      case Errc::NotARiver: return "NotARiver";
      case Errc::NotMountainRange: return "NotMountainRange";
      case Errc::NotMountain: return "NotMountain";
      case Errc::NotACanyon: return "NotACanyon";
      case Errc::NotIdempotent: return "NotIdempotent";
      case Errc::BadShape: return "BadShape";
      case Errc::NotAssociative: return "NotAssociative";
      case Errc::NotRegular: return "NotRegular";
      case Errc::EmptySandwich: return "EmptySandwich";
      case Errc::BadArgument: return "BadArgument";
      case Errc::CapExceeded: return "CapExceeded";
      case Errc::TooLarge: return "TooLarge";
      case Errc::InternalInvariantViolation:
        return "InternalInvariantViolation";
    }
    return "Unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
    if (_names.empty()) {
      throw Error(Errc::BadArgument, "the alphabet must be nonempty");
    }
    for (LetterId i = 0; i < _names.size(); ++i) {
      if (!is_identifier(_names[i])) {
        throw Error(Errc::Syntax, "bad letter name '" + _names[i] + "'");
      }
      if (!_index.emplace(_names[i], i).second) {
        throw Error(Errc::BadArgument, "duplicate letter '" + _names[i] + "'");
      }
    }
  }

  Alphabet Alphabet::from_list(std::string_view list) {
    std::vector<std::string> names;
    std::size_t              start = 0;
    while (start <= list.size()) {
      auto end = list.find(',', start);
      if (end == std::string_view::npos) {
        end = list.size();
      }
      auto part = list.substr(start, end - start);
      while (!part.empty() && std::isspace(static_cast<unsigned char>(part.front()))) {
        part.remove_prefix(1);
      }
      while (!part.empty() && std::isspace(static_cast<unsigned char>(part.back()))) {
        part.remove_suffix(1);
      }
      if (!part.empty()) {
        names.emplace_back(part);
      }
      start = end + 1;
    }
    return Alphabet(std::move(names));
  }

  LetterId Alphabet::id(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      throw Error(Errc::UnknownLetter,
                  "'" + std::string(name) + "' is not in the alphabet");
    }
    return it->second;
  }

  bool Alphabet::contains(std::string_view name) const {
    return _index.count(std::string(name)) != 0;
  }

  bool Alphabet::is_identifier(std::string_view s) noexcept {
    if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) {
      return false;
    }
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // GenStore
  ////////////////////////////////////////////////////////////////////////

  std::size_t GenStore::KeyHash::operator()(Key const& k) const noexcept {
    auto mix = [](std::size_t h, std::size_t v) {
      return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    };
    auto anchor_code = [](Anchor a) -> std::size_t {
      return a.is_one() ? 0 : (std::size_t(a.letter) << 2) | std::size_t(a.kind);
    };
    std::size_t h = std::size_t(k.kind);
    h             = mix(h, k.letter);
    h             = mix(h, k.left);
    h             = mix(h, k.mid);
    h             = mix(h, k.right);
    h             = mix(h, anchor_code(k.la));
    h             = mix(h, anchor_code(k.ra));
    return h;
  }

  GenStore::GenStore(Alphabet alphabet, unsigned height_cap)
      : _alphabet(std::move(alphabet)), _height_cap(height_cap) {
    if (_alphabet.size() == 0) {
      throw Error(Errc::BadArgument, "the alphabet must be nonempty");
    }
    Key     key{GenKind::Unit, 0, 0, 0, 0, Anchor::one(), Anchor::one()};
    GenNode unit;
    insert(key, unit);
    _bases.resize(_alphabet.size(), kUnit);
  }

  GenStore::~GenStore() = default;

  GenId GenStore::insert(Key const& key, GenNode const& node) {
    std::unique_lock lock(_mtx);
    if (auto it = _index.find(key); it != _index.end()) {
      return it->second;
    }
    std::size_t n = _size.load(std::memory_order_relaxed);
    if (n >= kChunkSize * kMaxChunks) {
      throw Error(Errc::TooLarge, "generator store is full");
    }
    auto& chunk = _chunks[n >> kChunkBits];
    if (!chunk) {
      chunk = std::make_unique<GenNode[]>(kChunkSize);
    }
    chunk[n & (kChunkSize - 1)] = node;
    GenId id{static_cast<std::uint32_t>(n)};
    _index.emplace(key, id);
    _size.store(n + 1, std::memory_order_release);
    return id;
  }

  GenNode const& GenStore::node(GenId g) const {
    if (g.value >= size()) {
      throw Error(Errc::BadArgument, "unknown generator id");
    }
    return _chunks[g.value >> kChunkBits][g.value & (kChunkSize - 1)];
  }

  GenId GenStore::base(LetterId x) {
    if (x >= _alphabet.size()) {
      throw Error(Errc::UnknownLetter, "letter id out of range");
    }
    if (_height_cap < 1) {
      throw Error(Errc::CapExceeded, "height cap 0 excludes g_{xx'}");
    }
    {
      std::shared_lock lock(_mtx);
      if (_bases[x] != kUnit) {
        return _bases[x];
      }
    }
    GenNode n;
    n.kind   = GenKind::BaseE;
    n.letter = x;
    n.ra     = Anchor::primed(x);
    n.height = 1;
    GenId id = insert(Key{GenKind::BaseE, x, 0, 0, 0, Anchor::one(),
                          Anchor::primed(x)},
                      n);
    std::unique_lock lock(_mtx);
    _bases[x] = id;
    return id;
  }

  GenId GenStore::entry(GenId g, Side s) const {
    auto const& n = node(g);
    if (n.kind == GenKind::Unit) {
      throw Error(Errc::HeightTooSmall, "the unit has no entries");
    }
    return s == Side::L ? n.left : n.right;
  }

  Anchor GenStore::anchor(GenId g, Side s) const {
    auto const& n = node(g);
    if (n.kind == GenKind::Unit) {
      throw Error(Errc::HeightTooSmall, "the unit has no anchors");
    }
    return s == Side::L ? n.la : n.ra;
  }

  GenId GenStore::middle(GenId g) const {
    auto const& n = node(g);
    if (n.height < 2) {
      throw Error(Errc::HeightTooSmall,
                  "the middle entry is only defined for height >= 2");
    }
    return n.mid;
  }

  GenKind GenStore::validate(TupleSpec const& t) const {
    auto const& l = node(t.left);
    auto const& r = node(t.right);
    auto const& m = node(t.mid);
    if (l.height == 0 || l.height != r.height || m.height + 1 != l.height) {
      throw Error(Errc::HeightMismatch,
                  "entries have heights " + std::to_string(l.height) + ", "
                      + std::to_string(m.height) + ", "
                      + std::to_string(r.height));
    }
    if (t.left == t.right) {
      // G_{i,e}: both arrangements ((g^{la})', (g^{ra})') of g = left.
      bool ok = is_e(t.left) && t.mid == l.left
                && ((t.la == l.la.inverse() && t.ra == l.ra.inverse())
                    || (t.la == l.ra.inverse() && t.ra == l.la.inverse()));
      if (!ok) {
        throw Error(Errc::EqualEntriesBadAnchors,
                    "equal left and right entries need the anchors of an "
                    "equal-entries tuple");
      }
      return GenKind::E;
    }
    auto matches = [this](GenId parent, Anchor a, GenId mid) {
      for (Side s : {Side::L, Side::R}) {
        if (entry(parent, s) == mid && a == anchor(parent, s).inverse()) {
          return true;
        }
      }
      return false;
    };
    if (!matches(t.left, t.la, t.mid)) {
      throw Error(Errc::NoAnchorMatch,
                  "the middle entry and left anchor match no side of the "
                  "left entry");
    }
    if (!matches(t.right, t.ra, t.mid)) {
      throw Error(Errc::NoAnchorMatch,
                  "the middle entry and right anchor match no side of the "
                  "right entry");
    }
    return GenKind::D;
  }

  Side GenStore::resolve_side(GenId parent, Anchor a, GenId mid) const {
    bool const by_anchor = is_e(parent);
    int        found     = 0;
    Side       side      = Side::L;
    for (Side s : {Side::L, Side::R}) {
      bool hit = by_anchor ? anchor(parent, s) == a.inverse()
                           : entry(parent, s) == mid;
      if (hit) {
        ++found;
        side = s;
      }
    }
    if (found == 2) {
      throw Error(Errc::AmbiguousSide, "both sides of an entry match");
    }
    if (found == 0) {
      throw Error(Errc::InternalInvariantViolation,
                  "no side of an entry matches after validation");
    }
    return side;
  }

  GenId GenStore::tuple(TupleSpec const& t) {
    Key key{GenKind::E,  0, t.left.value, t.mid.value, t.right.value,
            t.la,        t.ra};
    // The kind is a function of (left == right), so the key is structural.
    key.kind = t.left == t.right ? GenKind::E : GenKind::D;
    {
      std::shared_lock lock(_mtx);
      if (auto it = _index.find(key); it != _index.end()) {
        return it->second;
      }
    }
    GenKind kind = validate(t);
    GenNode n;
    n.kind   = kind;
    n.left   = t.left;
    n.la     = t.la;
    n.mid    = t.mid;
    n.ra     = t.ra;
    n.right  = t.right;
    n.height = node(t.left).height + 1;
    if (n.height > _height_cap) {
      throw Error(Errc::CapExceeded,
                  "height " + std::to_string(n.height) + " exceeds the cap "
                      + std::to_string(_height_cap));
    }
    n.la_side = resolve_side(t.left, t.la, t.mid);
    n.ra_side = resolve_side(t.right, t.ra, t.mid);
    if (anchor(t.left, n.la_side) != t.la.inverse()
        || anchor(t.right, n.ra_side) != t.ra.inverse()) {
      throw Error(Errc::InternalInvariantViolation,
                  "resolved side does not carry the involuted anchor");
    }
    return insert(key, n);
  }

  std::vector<GenId> GenStore::level(unsigned i, GenKind kind) {
    if (i == 0 || i > _height_cap) {
      throw Error(Errc::CapExceeded, "level " + std::to_string(i)
                                         + " is outside 1.."
                                         + std::to_string(_height_cap));
    }
    std::lock_guard lock(_level_mtx);
    while (_level_e.size() <= i) {
      build_level(static_cast<unsigned>(_level_e.size()));
    }
    return kind == GenKind::D ? _level_d[i] : _level_e[i];
  }

  void GenStore::build_level(unsigned i) {
    std::vector<GenId> es, ds;
    if (i == 1) {
      for (LetterId x = 0; x < _alphabet.size(); ++x) {
        es.push_back(base(x));
      }
    } else if (i >= 2) {
      for (GenId g : _level_e[i - 1]) {
        auto const& n = node(g);
        es.push_back(tuple({g, n.la.inverse(), n.left, n.ra.inverse(), g}));
        es.push_back(tuple({g, n.ra.inverse(), n.left, n.la.inverse(), g}));
      }
      std::vector<GenId> prev = _level_e[i - 1];
      prev.insert(prev.end(), _level_d[i - 1].begin(), _level_d[i - 1].end());
      // entry -> every (R, t) with R^t = entry
      std::unordered_map<GenId, std::vector<std::pair<GenId, Side>>> bucket;
      for (GenId g : prev) {
        for (Side s : {Side::L, Side::R}) {
          bucket[entry(g, s)].emplace_back(g, s);
        }
      }
      std::unordered_set<GenId> seen;
      for (GenId left : prev) {
        for (Side s : {Side::L, Side::R}) {
          GenId  mid = entry(left, s);
          Anchor la  = anchor(left, s).inverse();
          for (auto [right, t] : bucket[mid]) {
            if (right == left) {
              continue;
            }
            GenId g = tuple({left, la, mid, anchor(right, t).inverse(), right});
            if (seen.insert(g).second) {
              ds.push_back(g);
            }
          }
        }
      }
    }
    _level_e.push_back(std::move(es));
    _level_d.push_back(std::move(ds));
  }

  ////////////////////////////////////////////////////////////////////////
  // Generator operations
  ////////////////////////////////////////////////////////////////////////

  Word gL_word(GenStore const& store, GenId g) {
    auto const& n = store.node(g);
    if (n.height < 2) {
      throw Error(Errc::HeightTooSmall, "g^L needs height >= 2");
    }
    return {Token::anchor(n.la.inverse()), Token::gen(n.left),
            Token::anchor(n.la)};
  }

  Word gR_word(GenStore const& store, GenId g) {
    auto const& n = store.node(g);
    if (n.height < 2) {
      throw Error(Errc::HeightTooSmall, "g^R needs height >= 2");
    }
    return {Token::anchor(n.ra.inverse()), Token::gen(n.right),
            Token::anchor(n.ra)};
  }

  std::vector<GenId> ground(GenStore const& store, GenId g) {
    std::vector<GenId>        stack{g};
    std::unordered_set<GenId> seen{g};
    while (!stack.empty()) {
      GenId h = stack.back();
      stack.pop_back();
      if (h == kUnit) {
        continue;
      }
      for (Side s : {Side::L, Side::R}) {
        GenId e = store.entry(h, s);
        if (seen.insert(e).second) {
          stack.push_back(e);
        }
      }
    }
    std::vector<GenId> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  bool preceq(GenStore const& store, GenId h, GenId g) {
    if (h == g) {
      return true;
    }
    if (store.height(h) >= store.height(g)) {
      return false;
    }
    for (Side s : {Side::L, Side::R}) {
      if (preceq(store, h, store.entry(g, s))) {
        return true;
      }
    }
    return false;
  }

  std::vector<GenId> enumerate(GenStore& store, unsigned i, KindFilter kind) {
    std::vector<GenId> out;
    if (kind != KindFilter::D) {
      out = store.level(i, GenKind::E);
    }
    if (kind != KindFilter::E) {
      auto d = store.level(i, GenKind::D);
      out.insert(out.end(), d.begin(), d.end());
    }
    return out;
  }

  std::vector<GenId> enumerate_up_to(GenStore& store, unsigned max_height) {
    std::vector<GenId> out;
    for (unsigned i = 1; i <= max_height; ++i) {
      auto level = enumerate(store, i, KindFilter::All);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  std::string serialize(GenStore const& store, Anchor a) {
    switch (a.kind) {
      case Anchor::Kind::Plain: return store.alphabet().name(a.letter);
      case Anchor::Kind::Primed: return store.alphabet().name(a.letter) + "'";
      default: return "1";
    }
  }

  namespace {
    void serialize_into(GenStore const& store, GenId g, std::string& out) {
      auto const& n = store.node(g);
      switch (n.kind) {
        case GenKind::Unit: out += '1'; return;
        case GenKind::BaseE:
          out += "B(";
          out += store.alphabet().name(n.letter);
          out += ')';
          return;
        default:
          out += "T(";
          serialize_into(store, n.left, out);
          out += ';';
          out += serialize(store, n.la);
          out += ';';
          serialize_into(store, n.mid, out);
          out += ';';
          out += serialize(store, n.ra);
          out += ';';
          serialize_into(store, n.right, out);
          out += ')';
      }
    }

    class GenParser {
     public:
      GenParser(GenStore& store, std::string_view text)
          : _store(store), _text(text) {}

      GenId parse_all() {
        GenId g = gen();
        skip();
        if (_pos != _text.size()) {
          fail("trailing characters");
        }
        return g;
      }

     private:
      [[noreturn]] void fail(std::string const& why) const {
        throw Error(Errc::Syntax, why + " at offset " + std::to_string(_pos)
                                      + " in '" + std::string(_text) + "'");
      }
      void skip() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }
      void expect(char c) {
        skip();
        if (_pos >= _text.size() || _text[_pos] != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }
      std::string ident() {
        skip();
        std::size_t start = _pos;
        while (_pos < _text.size()
               && (std::islower(static_cast<unsigned char>(_text[_pos]))
                   || std::isdigit(static_cast<unsigned char>(_text[_pos]))
                   || _text[_pos] == '_')) {
          ++_pos;
        }
        auto id = std::string(_text.substr(start, _pos - start));
        if (!Alphabet::is_identifier(id)) {
          _pos = start;
          fail("expected an identifier");
        }
        return id;
      }
      Anchor anchor() {
        skip();
        if (_pos < _text.size() && _text[_pos] == '1') {
          ++_pos;
          return Anchor::one();
        }
        auto     name = ident();
        LetterId x    = _store.alphabet().id(name);
        if (_pos < _text.size() && _text[_pos] == '\'') {
          ++_pos;
          return Anchor::primed(x);
        }
        return Anchor::plain(x);
      }
      GenId gen() {
        skip();
        if (_pos >= _text.size()) {
          fail("unexpected end of input");
        }
        char c = _text[_pos];
        if (c == '1') {
          ++_pos;
          return kUnit;
        }
        if (c == 'B') {
          ++_pos;
          expect('(');
          auto name = ident();
          expect(')');
          return _store.base(name);
        }
        if (c == 'T') {
          ++_pos;
          expect('(');
          GenId left = gen();
          expect(';');
          Anchor la = anchor();
          expect(';');
          GenId mid = gen();
          expect(';');
          Anchor ra = anchor();
          expect(';');
          GenId right = gen();
          expect(')');
          return _store.tuple({left, la, mid, ra, right});
        }
        fail("expected a generator term");
      }

      GenStore&        _store;
      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace

  std::string serialize(GenStore const& store, GenId g) {
    std::string out;
    serialize_into(store, g, out);
    return out;
  }

  std::string serialize(GenStore const& store, Token const& t) {
    return t.is_gen() ? serialize(store, t.as_gen())
                      : serialize(store, t.as_anchor());
  }

  std::string serialize(GenStore const& store, Word const& w) {
    std::string out;
    for (auto const& t : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += serialize(store, t);
    }
    return out;
  }

  GenId parse_gen(GenStore& store, std::string_view text) {
    return GenParser(store, text).parse_all();
  }

  Anchor parse_anchor(GenStore const& store, std::string_view text) {
    if (text == "1") {
      return Anchor::one();
    }
    bool primed = !text.empty() && text.back() == '\'';
    if (primed) {
      text.remove_suffix(1);
    }
    if (!Alphabet::is_identifier(text)) {
      throw Error(Errc::Syntax, "bad anchor '" + std::string(text) + "'");
    }
    LetterId x = store.alphabet().id(text);
    return primed ? Anchor::primed(x) : Anchor::plain(x);
  }

  std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::string              cur;
    int                      depth = 0;
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
        if (!cur.empty()) {
          out.push_back(std::move(cur));
          cur.clear();
        }
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        continue;
      }
      if (c == '(') {
        ++depth;
      } else if (c == ')') {
        if (--depth < 0) {
          throw Error(Errc::Syntax, "unbalanced ')'");
        }
      }
      cur += c;
    }
    if (depth != 0) {
      throw Error(Errc::Syntax, "unbalanced '('");
    }
    if (!cur.empty()) {
      out.push_back(std::move(cur));
    }
    return out;
  }

  Word parse_word(GenStore& store, std::string_view text) {
    Word w;
    for (auto const& tok : split_tokens(text)) {
      if (tok.front() == 'B' || tok.front() == 'T') {
        w.push_back(Token::gen(parse_gen(store, tok)));
      } else {
        w.push_back(Token::anchor(parse_anchor(store, tok)));
      }
    }
    if (w.empty()) {
      throw Error(Errc::Syntax, "empty word");
    }
    return w;
  }

  std::vector<std::string> collect_identifiers(std::string_view text) {
    std::vector<std::string> out;
    auto is_tail = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    };
    for (std::size_t i = 0; i < text.size();) {
      bool boundary = i == 0
                      || !(std::isalnum(static_cast<unsigned char>(text[i - 1]))
                           || text[i - 1] == '_');
      if (boundary && text[i] >= 'a' && text[i] <= 'z') {
        std::size_t j = i;
        while (j < text.size() && is_tail(text[j])) {
          ++j;
        }
        std::string id(text.substr(i, j - i));
        if (std::find(out.begin(), out.end(), id) == out.end()) {
          out.push_back(std::move(id));
        }
        i = j;
      } else {
        ++i;
      }
    }
    return out;
  }

}  // namespace weakgen
