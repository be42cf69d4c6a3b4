#pragma once

#include "weightcat/rational.hpp"

#include <vector>

namespace weightcat {

// Dense univariate polynomial, coefficients from degree 0 upward.
struct Poly {
    QVec c;
    int degree() const;
    Q operator()(const Q& x) const;
    bool is_zero() const { return degree() < 0; }
    std::string str(const std::string& var = "t") const;
};

Poly interpolate(const QVec& xs, const QVec& ys);

struct RootSearch {
    QVec roots;     // distinct rational roots, ascending
    bool complete;  // false if some coefficient could not be factored
};

// Rational roots via the rational root theorem after removing content.
RootSearch rational_roots(const Poly& p);

}  // namespace weightcat
