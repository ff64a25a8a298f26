#pragma once

// Example inputs bundled with the toolkit: the two three-equation systems
// from Jacobi's work, their order matrices, an isoperimetric example and a
// few degenerate or bound-separating matrices.

#include <span>
#include <string_view>

namespace jacobi {

struct Fixture {
  std::string_view name;
  std::string_view content;
};

std::span<const Fixture> golden_fixtures() noexcept;

// nullptr when no fixture has that name.
const Fixture* find_fixture(std::string_view name) noexcept;

}  // namespace jacobi
