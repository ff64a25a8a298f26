#include "jacobi/fixtures.hpp"

#include <algorithm>
#include <array>

namespace jacobi {
namespace {

// Keep in sync with fixtures/; the unit tests compare both byte for byte.
constexpr std::array kFixtures{
    Fixture{"empty_row.json",
            R"fx({"n": 3, "entries": [[1, 0, null], [null, null, null], [0, 1, 2]]}
)fx"},
    Fixture{"greenspan_gap.json",
            R"fx({"n": 3, "entries": [[2, 1, 1], [1, 0, 0], [1, 0, 0]]}
)fx"},
    Fixture{"isoperimetric_1_2.json",
            R"fx({"n": 2, "entries": [[2, 3], [3, 4]]}
)fx"},
    Fixture{"isoperimetric_quadratic.txt",
            R"fx(# Euler-Lagrange equations of U = x1'^2/2 + x2''^2/2 + 2*x1'*x2''.
u1: -x1'' - 2*x2''' = 0
u2: x2^(4) + 2*x1''' = 0
)fx"},
    Fixture{"jacobi_example.json",
            R"fx({"n": 3, "entries": [[2, 1, null], [null, 2, 0], [null, 0, 1]]}
)fx"},
    Fixture{"jacobi_example.txt",
            R"fx(# Three equations, three unknowns; the order matrix is already a canon.
u1: x1'' - x2' = 0
u2: x2'' - x3 = 0
u3: x3' - x2 = 0
)fx"},
    Fixture{"two_normal_forms.json",
            R"fx({"n": 3, "entries": [[2, 2, 2], [null, 1, null], [null, 0, 0]]}
)fx"},
    Fixture{"two_normal_forms.txt",
            R"fx(# One maximal transversal but two shortest-reduction normal forms.
u1: x1'' + x2'' + x3'' = 0
u2: x2' = 0
u3: x2 + x3 = 0
)fx"},
};

}  // namespace

std::span<const Fixture> golden_fixtures() noexcept { return kFixtures; }

const Fixture* find_fixture(std::string_view name) noexcept {
  auto it = std::find_if(kFixtures.begin(), kFixtures.end(), [&](const Fixture& f) { return f.name == name; });
  return it == kFixtures.end() ? nullptr : &*it;
}

}  // namespace jacobi
