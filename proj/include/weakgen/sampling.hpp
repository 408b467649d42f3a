#ifndef WEAKGEN_SAMPLING_HPP_
#define WEAKGEN_SAMPLING_HPP_

#include <cstdint>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

#include "weakgen/landscape.hpp"
#include "weakgen/rewrite.hpp"

namespace weakgen {

  using Rng = std::mt19937_64;

  //! Random words, landscapes and mountains over a store, with generator
  //! heights in 1..max_height. Heights are drawn uniformly, then a generator
  //! uniformly within the level.
  class Sampler {
   public:
    Sampler(GenStore& store, unsigned max_height);

    GenStore& store() const noexcept {
      return _store;
    }
    unsigned max_height() const noexcept {
      return _max_height;
    }

    //! A generator of height 1..max_height, or the unit when with_unit
    //! and height 0 is drawn.
    GenId random_gen(Rng& rng, bool with_unit = false) const;
    Anchor random_anchor(Rng& rng) const;

    //! Roughly half anchors, half generators.
    Word random_word(Rng& rng, std::size_t length) const;

    //! beta1 of a random word with 1..max_tokens tokens.
    Landscape random_mountain_range(Rng& rng, std::size_t max_tokens) const;

    //! Uniform mountain with a random peak (possibly the trivial one).
    Landscape random_mountain(Rng& rng) const;

    //! A random downhill from a random peak of height >= 1 down to 1.
    Landscape random_downhill(Rng& rng) const;

    //! A random anchored walk with the given number of letters.
    Landscape random_landscape(Rng& rng, std::size_t letters) const;

    //! w and w' built from the same random tokens, with random relation
    //! pairs spliced in as lhs on one side and rhs on the other.
    std::pair<Word, Word> random_equivalent_pair(
        Rng&                             rng,
        std::vector<RelationPair> const& rel,
        std::size_t                      pieces) const;

   private:
    struct Step {
      Anchor a;
      GenId  to;
    };

    GenStore&                        _store;
    unsigned                         _max_height;
    std::vector<std::vector<GenId>>  _levels;  // _levels[h], h >= 1
    std::unordered_map<GenId, std::vector<Step>> _moves;
  };

  //! Reduces a mountain range by uplifting rivers in a random order.
  Landscape reduce_randomly(GenStore& store, Landscape u, Rng& rng);

}  // namespace weakgen

#endif  // WEAKGEN_SAMPLING_HPP_
