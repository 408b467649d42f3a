#ifndef WEAKGEN_SELFTEST_HPP_
#define WEAKGEN_SELFTEST_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace weakgen {

  //! Height cap of the store used by the suite. Products of height-3
  //! mountains routinely reach height 9 or more.
  inline constexpr unsigned kSuiteHeightCap = 24;

  struct SelftestOptions {
    unsigned      max_height = 3;
    std::uint64_t seed       = 7;
  };

  struct PropertyResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed  = 0;
    std::size_t unknown = 0;
    std::string note;  // first failure, if any

    bool passed() const noexcept {
      return failed == 0;
    }
  };

  //! `PASS name checked=N failed=0 [unknown=K] seed=S`
  std::string format_result(PropertyResult const& r, std::uint64_t seed);

  //! Names of the properties, in run order.
  std::vector<std::string> selftest_properties();

  //! Runs the property suite over X = {x, y}. on_result, when given, is
  //! called after each property.
  std::vector<PropertyResult> run_selftest(
      SelftestOptions const&                            opts,
      std::function<void(PropertyResult const&)> const& on_result = {});

}  // namespace weakgen

#endif  // WEAKGEN_SELFTEST_HPP_
