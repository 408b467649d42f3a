#ifndef WEAKGEN_RENDER_HPP_
#define WEAKGEN_RENDER_HPP_

#include <string>

#include "json.hpp"
#include "weakgen/landscape.hpp"

namespace weakgen {

  //! Letters longer than this are drawn as [k] with a legend.
  inline constexpr std::size_t kMaxLabel = 16;

  //! One text row per height, highest first. Anchors sit on the row of the
  //! lower endpoint of their edge.
  std::string render_ascii(GenStore const& store, Landscape const& u);

  //! SVG 1.1 line graph on a 40px grid.
  std::string render_svg(GenStore const& store, Landscape const& u);

  //! {"landscape", "vertices": [{index, term, label, height}],
  //!  "edges": [{from, to, anchor}]}
  nlohmann::json render_json(GenStore const& store, Landscape const& u);

}  // namespace weakgen

#endif  // WEAKGEN_RENDER_HPP_
