#ifndef WEAKGEN_TESTS_SUPPORT_HPP_
#define WEAKGEN_TESTS_SUPPORT_HPP_

#include <optional>
#include <string>

#include "weakgen/error.hpp"

namespace weakgen::test {

  //! The code of the weakgen::Error thrown by f, if any.
  template <typename F>
  std::optional<Errc> error_of(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return std::nullopt;
  }

}  // namespace weakgen::test

#endif  // WEAKGEN_TESTS_SUPPORT_HPP_
