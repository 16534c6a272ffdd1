#pragma once

#include <vector>

#include "aginv/integer_matrix.hpp"

namespace aginv {

// Smith normal form U * M * V = D with U, V unimodular and D diagonal,
// D(0,0) | D(1,1) | ... with non-negative diagonal entries.
struct SmithResult {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;
    std::size_t rank = 0;  // number of nonzero diagonal entries

    std::vector<Int> diagonal() const;
};

// Total and deterministic: pivots are chosen by smallest nonzero absolute
// value, ties broken by lowest row, then lowest column.
SmithResult smith_normal_form(const IntegerMatrix& m);

}  // namespace aginv
