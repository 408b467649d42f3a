#ifndef WEAKGEN_TERMS_HPP_
#define WEAKGEN_TERMS_HPP_

#include <array>
#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "weakgen/error.hpp"

namespace weakgen {

  using LetterId = std::uint32_t;

  //! The declared alphabet X. Letters are lowercase identifiers.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    //! Parses "x,y,z".
    static Alphabet from_list(std::string_view comma_separated);

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::string const& name(LetterId id) const {
      return _names.at(id);
    }
    LetterId id(std::string_view name) const;
    bool contains(std::string_view name) const;
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    static bool is_identifier(std::string_view s) noexcept;

   private:
    std::vector<std::string>                   _names;
    std::unordered_map<std::string, LetterId>  _index;
  };

  //! An element of A = X u X' u {1}.
  struct Anchor {
    enum class Kind : std::uint8_t { One, Plain, Primed };

    Kind     kind   = Kind::One;
    LetterId letter = 0;

    static constexpr Anchor one() noexcept {
      return {};
    }
    static constexpr Anchor plain(LetterId x) noexcept {
      return {Kind::Plain, x};
    }
    static constexpr Anchor primed(LetterId x) noexcept {
      return {Kind::Primed, x};
    }

    bool is_one() const noexcept {
      return kind == Kind::One;
    }

    //! The involution: 1' = 1, (x')' = x.
    constexpr Anchor inverse() const noexcept {
      switch (kind) {
        case Kind::Plain: return primed(letter);
        case Kind::Primed: return plain(letter);
        default: return one();
      }
    }

    constexpr bool operator==(Anchor const& o) const noexcept {
      return kind == o.kind && (kind == Kind::One || letter == o.letter);
    }
    constexpr std::strong_ordering operator<=>(Anchor const& o) const noexcept {
      if (auto c = kind <=> o.kind; c != 0) {
        return c;
      }
      return kind == Kind::One ? std::strong_ordering::equal
                               : letter <=> o.letter;
    }
  };

  //! Handle of an interned generator. Equal handles <=> equal generators.
  struct GenId {
    std::uint32_t value = 0;

    constexpr bool operator==(GenId const&) const noexcept = default;
    constexpr auto operator<=>(GenId const&) const noexcept = default;
  };

  //! The symbol 1 as a letter of G' (height 0).
  inline constexpr GenId kUnit{0};

  enum class GenKind : std::uint8_t { Unit, BaseE, E, D };
  enum class Side : std::uint8_t { L, R };

  constexpr Side other(Side s) noexcept {
    return s == Side::L ? Side::R : Side::L;
  }

  //! The five entries of a tuple generator (g^l, g^{la}, g^c, g^{ra}, g^r).
  struct TupleSpec {
    GenId  left;
    Anchor la;
    GenId  mid;
    Anchor ra;
    GenId  right;
  };

  struct GenNode {
    GenKind       kind    = GenKind::Unit;
    LetterId      letter  = 0;  // Base only
    GenId         left    = kUnit;
    Anchor        la      = Anchor::one();
    GenId         mid     = kUnit;
    Anchor        ra      = Anchor::one();
    GenId         right   = kUnit;
    std::uint32_t height  = 0;
    Side          la_side = Side::L;  // l_a = l.la_side (tuples only)
    Side          ra_side = Side::L;  // r_a = r.ra_side (tuples only)
  };

  //! A letter of G = G^5 u A.
  struct Token {
    std::variant<GenId, Anchor> value;

    static Token gen(GenId g) {
      return Token{g};
    }
    static Token anchor(Anchor a) {
      return Token{a};
    }
    bool is_gen() const noexcept {
      return std::holds_alternative<GenId>(value);
    }
    GenId as_gen() const {
      return std::get<GenId>(value);
    }
    Anchor as_anchor() const {
      return std::get<Anchor>(value);
    }
    bool operator==(Token const&) const = default;
  };

  using Word = std::vector<Token>;

  //! Append-only interning table for the generator universe G(X).
  //!
  //! Reads of already interned nodes are lock free; inserts are serialized.
  //! Node storage is chunked so that references returned by node() stay
  //! valid for the lifetime of the store.
  class GenStore {
   public:
    static constexpr unsigned kDefaultHeightCap = 8;

    explicit GenStore(Alphabet alphabet,
                      unsigned height_cap = kDefaultHeightCap);
    GenStore(GenStore const&)            = delete;
    GenStore& operator=(GenStore const&) = delete;
    ~GenStore();

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    unsigned height_cap() const noexcept {
      return _height_cap;
    }
    void set_height_cap(unsigned cap) noexcept {
      _height_cap = cap;
    }

    //! Number of interned nodes (including the unit).
    std::size_t size() const noexcept {
      return _size.load(std::memory_order_acquire);
    }

    GenId base(LetterId x);
    GenId base(std::string_view name) {
      return base(_alphabet.id(name));
    }

    //! Validates and interns a tuple; idempotent.
    GenId tuple(TupleSpec const& spec);

    //! Returns the kind (E or D) a tuple would have, or throws.
    GenKind validate(TupleSpec const& spec) const;

    GenNode const& node(GenId g) const;

    std::uint32_t height(GenId g) const {
      return node(g).height;
    }
    GenKind kind(GenId g) const {
      return node(g).kind;
    }
    bool is_e(GenId g) const {
      auto k = kind(g);
      return k == GenKind::BaseE || k == GenKind::E;
    }

    //! g^s for s in {l, r}; the base g_{xx'} has both entries 1.
    GenId entry(GenId g, Side s) const;
    //! g^{sa}; the base g_{xx'} has anchors 1 and x'.
    Anchor anchor(GenId g, Side s) const;
    //! g^c; only defined for tuples (height >= 2).
    GenId middle(GenId g) const;

    //! G_{i,e} (kind E) or G_{i,d} (kind D) in deterministic construction
    //! order. Built on first request and cached.
    std::vector<GenId> level(unsigned i, GenKind kind);

   private:
    static constexpr std::size_t kChunkBits = 12;
    static constexpr std::size_t kChunkSize = std::size_t(1) << kChunkBits;
    static constexpr std::size_t kMaxChunks = 4096;

    struct Key {
      GenKind       kind;
      LetterId      letter;
      std::uint32_t left, mid, right;
      Anchor        la, ra;
      bool          operator==(Key const&) const = default;
    };
    struct KeyHash {
      std::size_t operator()(Key const& k) const noexcept;
    };

    GenId insert(Key const& key, GenNode const& node);
    void  build_level(unsigned i);
    Side  resolve_side(GenId parent_entry, Anchor anchor, GenId mid) const;

    Alphabet                                        _alphabet;
    unsigned                                        _height_cap;
    std::array<std::unique_ptr<GenNode[]>, kMaxChunks> _chunks;
    std::atomic<std::size_t>                        _size{0};
    std::unordered_map<Key, GenId, KeyHash>         _index;
    mutable std::shared_mutex                       _mtx;
    std::vector<GenId>                              _bases;
    std::vector<std::vector<GenId>>                 _level_e;
    std::vector<std::vector<GenId>>                 _level_d;
    std::mutex                                      _level_mtx;
  };

  ////////////////////////////////////////////////////////////////////////
  // Operations on generators
  ////////////////////////////////////////////////////////////////////////

  //! The triplet (g^{la})' g^l g^{la}.
  Word gL_word(GenStore const& store, GenId g);
  //! The triplet (g^{ra})' g^r g^{ra}.
  Word gR_word(GenStore const& store, GenId g);

  //! The ground of g: the closure of {g} under taking left and right
  //! entries, sorted by id. Contains the unit.
  std::vector<GenId> ground(GenStore const& store, GenId g);

  //! h is in the ground of g.
  bool preceq(GenStore const& store, GenId h, GenId g);

  enum class KindFilter { E, D, All };

  //! Members of G_{i,e} and/or G_{i,d}, i >= 1.
  std::vector<GenId> enumerate(GenStore& store, unsigned i, KindFilter kind);

  //! Every generator of height 1..max_height (all kinds), by height.
  std::vector<GenId> enumerate_up_to(GenStore& store, unsigned max_height);

  std::string serialize(GenStore const& store, Anchor a);
  std::string serialize(GenStore const& store, GenId g);
  std::string serialize(GenStore const& store, Token const& t);
  std::string serialize(GenStore const& store, Word const& w);

  GenId  parse_gen(GenStore& store, std::string_view text);
  Anchor parse_anchor(GenStore const& store, std::string_view text);

  //! Splits a whitespace separated word into tokens, keeping parenthesised
  //! terms together even if they contain blanks.
  std::vector<std::string> split_tokens(std::string_view text);

  //! Parses a free word over G. The token "1" is read as the anchor 1.
  Word parse_word(GenStore& store, std::string_view text);

  //! Every identifier occurring in text, in order of first occurrence.
  std::vector<std::string> collect_identifiers(std::string_view text);

}  // namespace weakgen

template <>
struct std::hash<weakgen::GenId> {
  std::size_t operator()(weakgen::GenId g) const noexcept {
    return std::hash<std::uint32_t>{}(g.value);
  }
};

#endif  // WEAKGEN_TERMS_HPP_
