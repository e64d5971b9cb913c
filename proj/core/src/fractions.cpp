#include "hilbpairs/fractions.hpp"

#include <sstream>
#include <stdexcept>

#include "hilbpairs/errors.hpp"

namespace hilbpairs {

Rational LinearFraction::eval(const Rational& t1, const Rational& t2) const {
    Rational v = scalar * numerator.eval(t1, t2);
    for (const auto& [f, m] : denominator) {
        Rational fv = Rational(static_cast<long>(f.a)) * t1 + Rational(static_cast<long>(f.b)) * t2;
        if (fv.is_zero()) throw std::domain_error("LinearFraction::eval: denominator vanishes");
        for (int i = 0; i < m; ++i) v /= fv;
    }
    return v;
}

HomogeneousPoly expand_denominator(const std::map<LinearForm, int>& denom) {
    HomogeneousPoly acc = HomogeneousPoly::one();
    for (const auto& [f, m] : denom)
        for (int i = 0; i < m; ++i) acc = mul(acc, HomogeneousPoly::linear(f));
    return acc;
}

Rational sum_linear_fractions(const std::vector<LinearFraction>& terms) {
    if (terms.empty()) return 0;

    std::map<LinearForm, int> lcm;
    for (const auto& t : terms) {
        if (t.numerator.degree != t.denominator_degree())
            throw std::invalid_argument("sum_linear_fractions: term is not of degree zero");
        for (const auto& [f, m] : t.denominator) {
            auto it = lcm.find(f);
            if (it == lcm.end()) lcm.emplace(f, m);
            else if (it->second < m) it->second = m;
        }
    }

    HomogeneousPoly common = expand_denominator(lcm);
    HomogeneousPoly total = HomogeneousPoly::zero(common.degree);
    for (const auto& t : terms) {
        std::map<LinearForm, int> cofactor = lcm;
        for (const auto& [f, m] : t.denominator) cofactor[f] -= m;
        HomogeneousPoly piece = mul(t.numerator, expand_denominator(cofactor));
        add_assign(total, piece, t.scalar);
    }

    Rational ratio = 0;
    std::size_t pivot = common.coeff.size();
    for (std::size_t i = 0; i < common.coeff.size(); ++i) {
        if (!common.coeff[i].is_zero()) { pivot = i; break; }
    }
    if (pivot == common.coeff.size())
        throw consistency_error("sum_linear_fractions: expanded denominator is zero");
    ratio = total.coeff[pivot] / common.coeff[pivot];
    for (std::size_t i = 0; i < common.coeff.size(); ++i) {
        if (total.coeff[i] != ratio * common.coeff[i]) {
            std::ostringstream os;
            os << "sum_linear_fractions: sum is not constant (coefficient " << i
               << " breaks proportionality)";
            throw consistency_error(os.str());
        }
    }
    return ratio;
}

} // namespace hilbpairs
