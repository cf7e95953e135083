// Copyright the rlz contributors. MIT license, see LICENSE in the project root.
#pragma once

#include <stdexcept>

namespace rlz {

// Thrown when a caller breaks a documented precondition. Deliberately not
// assert(): contract checks stay on in release builds and are testable.
struct contract_error : std::logic_error {
  using std::logic_error::logic_error;
};

namespace detail {
[[noreturn]] inline void contract_fail(const char* what) { throw contract_error(what); }
}  // namespace detail

}  // namespace rlz

#define RLZ_REQUIRE(cond, what)                  \
  do {                                           \
    if (!(cond)) ::rlz::detail::contract_fail(what); \
  } while (0)
