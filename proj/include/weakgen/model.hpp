#ifndef WEAKGEN_MODEL_HPP_
#define WEAKGEN_MODEL_HPP_

#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "weakgen/landscape.hpp"
#include "weakgen/rewrite.hpp"

namespace weakgen {

  //! An element of the normal-form model: a river-free mountain range.
  class Mountain {
   public:
    //! The trivial mountain 1, the identity.
    Mountain() = default;

    //! Throws NotMountain unless u is a mountain.
    static Mountain from(GenStore const& store, Landscape u);
    //! beta(w)
    static Mountain of_word(GenStore& store, Word const& w);

    Landscape const& landscape() const noexcept {
      return _u;
    }
    bool is_trivial() const noexcept {
      return _u.is_single();
    }
    GenId peak() const noexcept {
      return _u.letters[_peak];
    }
    Landscape left_hill() const;
    Landscape right_hill() const;

    bool operator==(Mountain const& o) const noexcept {
      return _u == o._u;
    }

   private:
    Landscape   _u;
    std::size_t _peak = 0;
  };

  enum class Green { R, L, J, H, D, LeqR, LeqL, LeqJ };

  std::string_view to_string(Green g) noexcept;
  Green            green_from_string(std::string_view s);

  enum class Tri { True, False, Unknown };
  std::string_view to_string(Tri t) noexcept;

  struct ClassSizes {
    std::size_t r, l, d;
    bool        operator==(ClassSizes const&) const = default;
  };

  //! The monoid (M, .) of mountains under u . v = beta2(u * v).
  //!
  //! All set-valued results are sorted by serialized form.
  class Model {
   public:
    explicit Model(GenStore& store) : _store(store) {}

    GenStore& store() const noexcept {
      return _store;
    }

    Mountain mountain(Landscape u) const {
      return Mountain::from(_store, std::move(u));
    }
    Mountain parse(std::string_view word_text) const;
    std::string serialize(Mountain const& u) const;

    Mountain mul(Mountain const& u, Mountain const& v) const;
    Mountain mul(Mountain const& u, Mountain const& v, Mountain const& w) const {
      return mul(mul(u, v), w);
    }

    //! Green's relations and quasi-orders, read off hills and peaks.
    bool green(Green rel, Mountain const& u, Mountain const& v) const;

    bool is_idempotent(Mountain const& u) const;

    //! V(u), searched among the mountains with peak kappa(u).
    std::vector<Mountain> inverses(Mountain const& u);

    //! S(e, f) = {h in V(e . f) : f . h = h = h . e}.
    std::vector<Mountain> sandwich_set(Mountain const& e, Mountain const& f);

    //! v <= u in the natural partial order.
    bool natural_leq(Mountain const& v, Mountain const& u);

    //! The same order through hill extensions and gorges; three valued
    //! because gorge recognition is a bounded search.
    Tri natural_leq_gorge(Mountain const& v,
                          Mountain const& u,
                          SearchBounds    bounds = {});

    //! Idempotency through the gorge route.
    GorgeResult idempotent_by_gorge(Mountain const& u) const;

    std::vector<Mountain> dclass(Mountain const& u);
    std::vector<Mountain> rclass(Mountain const& u);
    std::vector<Mountain> lclass(Mountain const& u);
    ClassSizes            class_sizes(GenId g);

    //! All mountains with peak g, sorted.
    std::vector<Mountain> const& mountains_with_peak(GenId g);

   private:
    std::vector<Mountain> sorted(std::vector<Mountain> v) const;

    GenStore&                                          _store;
    std::unordered_map<GenId, std::vector<Mountain>>   _by_peak;
  };

}  // namespace weakgen

#endif  // WEAKGEN_MODEL_HPP_
