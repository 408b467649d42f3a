#ifndef WEAKGEN_REWRITE_HPP_
#define WEAKGEN_REWRITE_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "weakgen/landscape.hpp"
#include "weakgen/terms.hpp"

namespace weakgen {

  enum class UpliftMode { Collapse, Replace };

  struct UpliftStep {
    std::size_t position = 0;
    UpliftMode  mode     = UpliftMode::Collapse;
    GenId       new_gen  = kUnit;  // Replace only
  };

  //! Uplifts the river at letter index i. A collapse deletes
  //! a_i g_i a_{i+1} g_{i+1}; otherwise g_i is replaced by
  //! h_i = (g_{i+1}, a_{i+1}', g_i, a_i, g_{i-1}).
  Landscape uplift_at(GenStore&   store,
                      Landscape const& u,
                      std::size_t i,
                      UpliftStep* step = nullptr);

  //! Normal form of a mountain range: uplifts the leftmost river of minimal
  //! height until none is left. When trace is given, every intermediate
  //! landscape (including the input) is appended to it.
  Landscape beta2(GenStore&               store,
                  Landscape const&        u,
                  std::vector<Landscape>* trace = nullptr);

  //! beta2(beta1(w)); the unique mountain in the class of w.
  Landscape beta(GenStore& store, Word const& w);

  //! Decides [u] = [v].
  bool equivalent(GenStore& store, Word const& u, Word const& v);

  enum class RelationKind {
    InverseX,      // (x x' x, x)
    InverseXp,     // (x' x x', x')
    BaseProduct,   // (g_{xx'}, x x')
    LeftUnit,      // (1 g, g)
    RightUnit,     // (g 1, g)
    Idempotent,    // (g g, g)
    LeftSandwich,  // (g^c g^L g, g)
    RightSandwich, // (g g^R g^c, g)
    Middle,        // (g^R g g^L, g^R g^c g^L)
  };

  std::string_view to_string(RelationKind k) noexcept;

  struct RelationPair {
    Word         lhs;
    Word         rhs;
    RelationKind kind;
    GenId        gen = kUnit;  // the g of the pair, when there is one
  };

  //! rho_e for every letter and every g in G' of height <= max_height, and
  //! the three rho_s pairs for every g with 2 <= height(g) <= max_height.
  std::vector<RelationPair> relations(GenStore& store, unsigned max_height);

  struct SearchBounds {
    std::size_t             max_states = 100000;
    std::optional<unsigned> height_cap;  // defaults to the store's cap
  };

  enum class Reach { Yes, No, Unknown };
  std::string_view to_string(Reach r) noexcept;

  //! Bounded search over all uplift orders for a path u ->* target.
  Reach reduces_to(GenStore&        store,
                   Landscape const& u,
                   Landscape const& target,
                   SearchBounds     bounds = {});

  enum class GorgeResult { Gorge, NotGorge, Unknown };
  std::string_view to_string(GorgeResult r) noexcept;

  //! Whether the canyon w reduces to its end letter. A single letter counts
  //! as a trivial gorge. Default bounds: 10^5 states and a height cap two
  //! above the end letter.
  GorgeResult is_gorge(GenStore&                   store,
                       Landscape const&            w,
                       std::optional<SearchBounds> bounds = std::nullopt);

}  // namespace weakgen

#endif  // WEAKGEN_REWRITE_HPP_
