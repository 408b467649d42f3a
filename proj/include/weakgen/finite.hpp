#ifndef WEAKGEN_FINITE_HPP_
#define WEAKGEN_FINITE_HPP_

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "weakgen/terms.hpp"

namespace weakgen {

  using Elem = std::uint32_t;

  //! A finite semigroup given by its multiplication table.
  class FiniteSemigroup {
   public:
    //! Checks shape, range and associativity. Throws BadShape or
    //! NotAssociative.
    FiniteSemigroup(std::size_t                  size,
                    std::vector<Elem>            table,
                    std::optional<Elem>          identity = std::nullopt);

    //! {"size": m, "table": [[...]], "identity": id|null}
    static FiniteSemigroup from_json(nlohmann::json const& j);
    nlohmann::json         to_json() const;

    std::size_t size() const noexcept {
      return _size;
    }
    Elem mul(Elem a, Elem b) const {
      return _table[std::size_t(a) * _size + b];
    }
    //! The declared identity, or one found by scanning the table.
    std::optional<Elem> identity() const noexcept {
      return _identity;
    }
    bool is_idempotent(Elem a) const {
      return mul(a, a) == a;
    }

   private:
    std::size_t         _size;
    std::vector<Elem>   _table;
    std::optional<Elem> _identity;
  };

  //! S^1: S itself when S has an identity, else S with a new element m.
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& s);

  std::vector<Elem> idempotents(FiniteSemigroup const& s);
  std::vector<Elem> inverses_of(FiniteSemigroup const& s, Elem a);
  bool              is_regular(FiniteSemigroup const& s);
  //! S(e, f) = {g in E(S) : f g = g = g e, e g f = e f}.
  std::vector<Elem> sandwich_finite(FiniteSemigroup const& s, Elem e, Elem f);

  //! T_n acting on the right: (a b)(i) = b(a(i)). Element id is
  //! sum_i f(i) n^i. n <= 4.
  FiniteSemigroup full_transformation_monoid(unsigned n);
  Elem              transformation_id(std::vector<unsigned> const& images);
  std::vector<unsigned> transformation_images(unsigned n, Elem id);

  struct ChoiceStrategy {
    enum class Kind { First, Seeded };
    Kind          kind = Kind::First;
    std::uint64_t seed = 0;

    static ChoiceStrategy first() {
      return {};
    }
    static ChoiceStrategy seeded(std::uint64_t s) {
      return {Kind::Seeded, s};
    }
  };

  //! A skeleton mapping phi : G -> S^1 extending x -> x_images[x], built
  //! lazily. 1 phi is the identity of S^1; x' phi is a chosen inverse of
  //! x phi; g_{xx'} phi = (x phi)(x' phi); for height >= 2, g phi is a chosen
  //! element of S(g^{phi,r}, g^{phi,l}).
  class SkeletonMap {
   public:
    SkeletonMap(GenStore&              store,
                FiniteSemigroup const& s,
                std::vector<Elem>      x_images,
                ChoiceStrategy         strategy,
                unsigned               max_height);

    //! S^1
    FiniteSemigroup const& target() const noexcept {
      return _target;
    }
    Elem one() const noexcept {
      return _one;
    }
    unsigned max_height() const noexcept {
      return _max_height;
    }
    ChoiceStrategy strategy() const noexcept {
      return _strategy;
    }
    GenStore& store() const noexcept {
      return _store;
    }

    Elem image(Anchor a);
    Elem image(GenId g);
    Elem image(Token const& t) {
      return t.is_gen() ? image(t.as_gen()) : image(t.as_anchor());
    }
    //! (g^c phi)((g^{la})' phi)(g^l phi)(g^{la} phi)
    Elem phi_l(GenId g);
    //! ((g^{ra})' phi)(g^r phi)(g^{ra} phi)(g^c phi)
    Elem phi_r(GenId g);

    //! Generators memoized so far.
    std::vector<std::pair<GenId, Elem>> memo() const;

   private:
    Elem choose(std::vector<Elem> const& options, std::string const& key) const;

    GenStore&                        _store;
    FiniteSemigroup                  _target;
    Elem                             _one;
    std::vector<Elem>                _x;
    std::vector<Elem>                _xp;
    ChoiceStrategy                   _strategy;
    unsigned                         _max_height;
    std::unordered_map<GenId, Elem>  _memo;
    mutable std::recursive_mutex     _mtx;
  };

  //! Throws NotRegular unless s is regular.
  SkeletonMap build_skeleton(GenStore&              store,
                             FiniteSemigroup const& s,
                             std::vector<Elem>      x_images,
                             ChoiceStrategy         strategy,
                             unsigned               max_height);

  //! The homomorphism induced on words: the product of token images.
  Elem phi_hat(SkeletonMap& sk, Word const& w);

  struct ClosureReport {
    std::vector<Elem> elements;  // sorted
    bool              regular             = false;
    bool              one_phi_is_identity = false;
  };

  //! Closure of {g phi : g in G, height(g) <= max_height} in S^1.
  ClosureReport image_closure(SkeletonMap& sk, unsigned max_height);

  //! Subsemigroup of s generated by gens.
  std::vector<Elem> closure(FiniteSemigroup const& s,
                            std::vector<Elem> const& gens);
  //! Every element of the subset has an inverse inside it.
  bool is_regular_subset(FiniteSemigroup const& s,
                         std::vector<Elem> const& subset);

  struct ProbeResult {
    enum class Kind { LooksMinimal, FoundProper, Unknown };
    Kind              kind = Kind::Unknown;
    std::vector<Elem> subset;
  };
  std::string_view to_string(ProbeResult::Kind k) noexcept;

  //! Looks for a proper regular subsemigroup of s containing x_images:
  //! exhaustive when |s| <= 12, greedy descent within budget otherwise.
  ProbeResult weakly_generated_probe(FiniteSemigroup const&   s,
                                     std::vector<Elem> const& x_images,
                                     std::size_t              budget);

  //! Anchor images, generator images by height and the closure checks.
  nlohmann::json skeleton_report(SkeletonMap& sk, unsigned max_height);

}  // namespace weakgen

#endif  // WEAKGEN_FINITE_HPP_
