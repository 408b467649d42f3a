#ifndef WEAKGEN_LANDSCAPE_HPP_
#define WEAKGEN_LANDSCAPE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "weakgen/terms.hpp"

namespace weakgen {

  //! A word g0 a1 g1 ... an gn over G in which every triplet is anchored.
  //!
  //! Stored as its letters subsequence and anchors subsequence; the anchor
  //! anchors[i] sits between letters[i] and letters[i + 1].
  struct Landscape {
    std::vector<GenId>  letters{kUnit};
    std::vector<Anchor> anchors;

    static Landscape single(GenId g) {
      return Landscape{{g}, {}};
    }

    //! Number of tokens (letters and anchors).
    std::size_t length() const noexcept {
      return letters.size() + anchors.size();
    }
    GenId first() const {
      return letters.front();
    }
    GenId last() const {
      return letters.back();
    }
    bool is_single() const noexcept {
      return letters.size() == 1;
    }

    Word as_word() const;

    bool operator==(Landscape const&) const = default;
  };

  struct LandscapeHash {
    std::size_t operator()(Landscape const& u) const noexcept;
  };

  enum class ShapeClass {
    SingleLetter,
    Uphill,
    Downhill,
    UpDown,
    Valley,
    Mountain,
    MountainRange,
    Canyon,
    General
  };

  std::string_view to_string(ShapeClass c) noexcept;

  //! (g1, a) = (g2^s, g2^{sa}) for some side s.
  bool is_left_anchored(GenStore const& store, GenId g1, Anchor a, GenId g2);
  //! (g2, a) = (g1^s, (g1^{sa})') for some side s.
  bool is_right_anchored(GenStore const& store, GenId g1, Anchor a, GenId g2);

  inline bool is_anchored(GenStore const& store, GenId g1, Anchor a, GenId g2) {
    return is_left_anchored(store, g1, a, g2)
           || is_right_anchored(store, g1, a, g2);
  }

  //! Checks alternation and anchoring. A token "1" in a letter position is
  //! read as the unit letter.
  Landscape validate_landscape(GenStore const& store, Word const& w);

  Landscape parse_landscape(GenStore& store, std::string_view text);

  //! u * v: concatenation with the shared junction letter written once.
  Landscape star(Landscape const& u, Landscape const& v);

  //! g_n a_n' g_{n-1} ... g_1 a_1' g_0
  Landscape reverse(Landscape const& u);

  ShapeClass classify(GenStore const& store, Landscape const& u);

  bool is_mountain_range(Landscape const& u) noexcept;
  bool is_mountain(GenStore const& store, Landscape const& u);

  //! Letter indices of rivers / ridges / peaks.
  std::vector<std::size_t> rivers(GenStore const& store, Landscape const& u);
  std::vector<std::size_t> ridges(GenStore const& store, Landscape const& u);
  std::vector<std::size_t> peaks(GenStore const& store, Landscape const& u);

  //! The unique peak. A single letter is its own peak.
  GenId kappa(GenStore const& store, Landscape const& u);

  //! Maximum over the peaks and both end letters.
  unsigned height(GenStore const& store, Landscape const& u);

  //! The canonical uphill from 1 to g.
  Landscape lambda_l(GenStore const& store, GenId g);
  //! The canonical downhill from g to 1.
  Landscape lambda_r(GenStore const& store, GenId g);

  //! Initial maximal uphill / final maximal downhill of a landscape.
  Landscape left_hill(GenStore const& store, Landscape const& u);
  Landscape right_hill(GenStore const& store, Landscape const& u);

  //! The embedding of words into mountain ranges.
  Landscape beta1(GenStore& store, Token const& t);
  Landscape beta1(GenStore& store, Word const& w);

  std::vector<Landscape> enumerate_uphills(GenStore const& store, GenId g);
  std::vector<Landscape> enumerate_downhills(GenStore const& store, GenId g);
  //! All mountains with peak g (for g = 1, just the trivial mountain).
  std::vector<Landscape> enumerate_mountains(GenStore const& store, GenId g);

  std::string serialize(GenStore const& store, Landscape const& u);

  //! {"letters":[{"term":..,"height":..}],"anchors":[..]}
  nlohmann::json to_json(GenStore const& store, Landscape const& u);
  Landscape      landscape_from_json(GenStore& store, nlohmann::json const& j);

}  // namespace weakgen

#endif  // WEAKGEN_LANDSCAPE_HPP_
