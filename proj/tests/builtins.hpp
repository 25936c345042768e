// The builtin algebra list shared by the tests.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fw/core.hpp"

inline std::vector<std::pair<std::string, fw::Algebra>> all_builtins() {
    using namespace fw;
    return {{"ground", make_ground()},
            {"trunc3 all", make_truncated_poly(3, "all")},
            {"trunc3 unit", make_truncated_poly(3, "unit")},
            {"trunc4 all", make_truncated_poly(4, "all")},
            {"trunc4 sq", make_truncated_poly(4, "sq")},
            {"Cl1 even", make_clifford(1, "even")},
            {"Cl1 unit", make_clifford(1, "unit")},
            {"Cl2 even", make_clifford(2, "even")},
            {"Cl2 unit", make_clifford(2, "unit")},
            {"Grassmann2 even", make_grassmann(2, "even")},
            {"Grassmann2 half", make_grassmann(2, "half")},
            {"zigzag A2", make_zigzag_A(2)},
            {"zigzag A3", make_zigzag_A(3)},
            {"trivial extension A2", make_trivial_extension(make_path_A2(false))},
            {"Laurent path [-2,2]", make_laurent_path(-2, 2, "even")}};
}
