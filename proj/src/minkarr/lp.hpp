#pragma once

#include <vector>

#include "minkarr/scalar.hpp"

namespace minkarr::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
    Status status = Status::Infeasible;
    Rational value;             // objective at optimum
    std::vector<Rational> x;    // optimizer (original variables)
};

// maximize c.x subject to A x <= b, x free. Exact two-phase dense simplex
// with Bland's rule; free variables are split internally. Desk-scale sizes
// only (hundreds of rows, tens of variables).
Result maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                const std::vector<Rational>& c);

}  // namespace minkarr::lp
