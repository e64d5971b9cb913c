#pragma once

#include <map>
#include <vector>

#include "hilbpairs/character.hpp"
#include "hilbpairs/series.hpp"

namespace hilbpairs {

/// One localization summand: scalar * numerator / prod of linear forms.
/// Denominator forms are kept normalized (primitive, first nonzero entry
/// positive); the integer factors pulled out of them live in the scalar.
/// A well-formed term has numerator degree equal to the denominator degree,
/// so the whole fraction has degree zero.
struct LinearFraction {
    Rational scalar = Rational(1);
    HomogeneousPoly numerator = HomogeneousPoly::one();
    std::map<LinearForm, int> denominator;

    int denominator_degree() const {
        int d = 0;
        for (const auto& [f, m] : denominator) d += m;
        return d;
    }

    /// Divide by the (not necessarily normalized) form w.
    void divide_by_form(LinearForm w) {
        auto nf = normalize(w);
        scalar /= Rational(static_cast<long>(nf.scale));
        denominator[nf.form] += 1;
    }

    /// Exact value at a point where no denominator form vanishes.
    Rational eval(const Rational& t1, const Rational& t2) const;
};

/// Expanded product of normalized forms with multiplicities.
HomogeneousPoly expand_denominator(const std::map<LinearForm, int>& denom);

/// Sums the terms over their least common denominator and verifies that the
/// result is a constant: the total numerator must be a rational multiple of
/// the expanded common denominator. Returns that multiple. A non-constant
/// sum throws consistency_error (it means the integrand was assembled
/// wrongly, not that the input data is bad).
Rational sum_linear_fractions(const std::vector<LinearFraction>& terms);

} // namespace hilbpairs
