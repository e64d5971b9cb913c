#include "hilbpairs/invariants.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "hilbpairs/hilb_characters.hpp"
#include "hilbpairs/series.hpp"

namespace hilbpairs {

InvariantRequest::InvariantRequest(SurfaceModel S, DivisorClass L1_, DivisorClass L2_,
                                   DivisorClass beta_, std::int64_t n_)
    : surface(std::move(S)), L1(std::move(L1_)), L2(std::move(L2_)), beta(std::move(beta_)),
      n(n_) {
    if (n < 0) throw std::invalid_argument("InvariantRequest: n must be >= 0");
    DivisorClass sum = hilbpairs::add(surface, L1, L2);
    if (sum.pic != surface.canonical.pic)
        throw std::invalid_argument("InvariantRequest: L1 + L2 is not the canonical class");
}

std::string to_string(VanishingReason r) {
    switch (r) {
    case VanishingReason::None: return "none";
    case VanishingReason::BetaZero: return "beta_zero";
    case VanishingReason::BetaNotEffective: return "beta_not_effective";
    case VanishingReason::BetaSqNegative: return "beta_sq_negative";
    case VanishingReason::ChiNonpositive: return "chi_nonpositive";
    case VanishingReason::MNegative: return "m_negative";
    }
    return "none";
}

LinearFraction fixed_point_contribution(const InvariantRequest& req, const FixedPoint& Z) {
    const SurfaceModel& S = req.surface;
    const std::int64_t m = point_count_m(S, req.beta, req.n);
    const std::int64_t chi = riemann_roch_chi(S, req.beta);
    if (m < 0 || chi < 1)
        throw std::invalid_argument("fixed_point_contribution: guards require m >= 0, chi >= 1");
    if (Z.size() != m)
        throw std::invalid_argument("fixed_point_contribution: fixed point size differs from m");

    const int h_cap = static_cast<int>(chi) - 1;
    const int t_cap = 2 * static_cast<int>(m);

    DivisorClass bL1 = add(S, req.beta, req.L1);
    DivisorClass bL2 = add(S, req.beta, req.L2);

    std::vector<BiSeries> factors;

    // c_m of the twisted tautological bundle of O(beta).
    for (LinearForm w : taut_weights(S, Z, req.beta))
        factors.push_back(BiSeries::affine(0, 1, w, h_cap, t_cap));

    // Point insertions and the linear system factor.
    factors.push_back(BiSeries::h_power(static_cast<int>(req.n), h_cap, t_cap));
    factors.push_back(BiSeries::binomial_h(+1, riemann_roch_chi(S, bL1), h_cap, t_cap));
    factors.push_back(BiSeries::binomial_h(-1, riemann_roch_chi(S, bL2), h_cap, t_cap));

    // Total Chern class of the twisted tangent bundle.
    Character twisted = twisted_tangent_character(S, Z, req.L1);
    for (const auto& [e, mult] : twisted.terms())
        factors.push_back(BiSeries::one_plus_form_power(form_of(e), mult, h_cap, t_cap));

    // Reciprocals of the two twisted tautological Chern classes.
    for (LinearForm w : taut_weights(S, Z, bL1))
        factors.push_back(BiSeries::reciprocal_affine(+1, w, h_cap, t_cap));
    for (LinearForm w : taut_weights(S, Z, bL2))
        factors.push_back(BiSeries::reciprocal_affine(-1, LinearForm{-w.a, -w.b}, h_cap, t_cap));

    BiSeries integrand = series_product(factors, h_cap, t_cap);

    LinearFraction term;
    term.numerator = extract(integrand, h_cap, t_cap);
    for (LinearForm w : tangent_weights(S, Z)) term.divide_by_form(w);
    return term;
}

InvariantResult stable_pair_invariant(const InvariantRequest& req) {
    const SurfaceModel& S = req.surface;
    InvariantResult res;
    res.m = point_count_m(S, req.beta, req.n);
    res.chi_beta = riemann_roch_chi(S, req.beta);
    res.beta_sq = intersect(S, req.beta, req.beta);
    res.beta_dot_L2 = intersect(S, req.beta, req.L2);
    res.sign = ((res.beta_dot_L2 + req.n) % 2 == 0) ? 1 : -1;
    res.classification = classify_reference(S, req.L1, req.L2, req.beta, req.n);

    // Vanishing guards, in priority order.
    if (is_zero_class(req.beta)) {
        if (req.n == 0) {
            res.value = 1;
            res.sign = 1;
            return res;
        }
        res.value = 0;
        res.vanishing = VanishingReason::BetaZero;
        return res;
    }
    if (!is_effective(S, req.beta)) {
        res.value = 0;
        res.vanishing = VanishingReason::BetaNotEffective;
        return res;
    }
    if (res.beta_sq < 0) {
        res.value = 0;
        res.vanishing = VanishingReason::BetaSqNegative;
        return res;
    }
    if (res.chi_beta < 1) {
        res.value = 0;
        res.vanishing = VanishingReason::ChiNonpositive;
        return res;
    }
    if (res.m < 0) {
        res.value = 0;
        res.vanishing = VanishingReason::MNegative;
        return res;
    }

    std::vector<LinearFraction> terms;
    for (const FixedPoint& Z : enumerate_fixed_points(S, static_cast<int>(res.m)))
        terms.push_back(fixed_point_contribution(req, Z));
    res.value = Rational(res.sign) * sum_linear_fractions(terms);
    return res;
}

Rational carlsson_okounkov(const SurfaceModel& S, const DivisorClass& L1, int m) {
    if (m < 0) throw std::invalid_argument("carlsson_okounkov: m must be >= 0");
    const int t_cap = 2 * m;
    std::vector<LinearFraction> terms;
    for (const FixedPoint& Z : enumerate_fixed_points(S, m)) {
        std::vector<BiSeries> factors;
        Character twisted = twisted_tangent_character(S, Z, L1);
        for (const auto& [e, mult] : twisted.terms())
            factors.push_back(BiSeries::one_plus_form_power(form_of(e), mult, 0, t_cap));
        BiSeries total = series_product(factors, 0, t_cap);
        LinearFraction term;
        term.numerator = extract(total, 0, t_cap);
        for (LinearForm w : tangent_weights(S, Z)) term.divide_by_form(w);
        terms.push_back(std::move(term));
    }
    return sum_linear_fractions(terms);
}

std::vector<Rational> carlsson_okounkov_series(const SurfaceModel& S, const DivisorClass& L1,
                                               const DivisorClass& L2, int max_m) {
    std::int64_t c = S.euler - intersect(S, L1, L2);
    // prod_k (1-q^k)^(-c) expanded through q^max_m.
    std::vector<Rational> coeff(static_cast<std::size_t>(max_m) + 1);
    coeff[0] = 1;
    for (int k = 1; k <= max_m; ++k) {
        // Multiply by (1-q^k)^(-c) = sum_j C(c+j-1, j) q^(kj).
        std::vector<Rational> next = coeff;
        for (int j = 1; k * j <= max_m; ++j) {
            Rational b = binomial(c + j - 1, j);
            for (int i = 0; i + k * j <= max_m; ++i)
                next[static_cast<std::size_t>(i + k * j)] += b * coeff[static_cast<std::size_t>(i)];
        }
        coeff = std::move(next);
    }
    return coeff;
}

CoReport co_coincidence_report(const InvariantRequest& req) {
    CoReport rep;
    InvariantResult inv = stable_pair_invariant(req);
    rep.invariant = inv.value;
    rep.m = inv.m;
    if (inv.m < 0 || inv.value.is_zero()) {
        rep.vanishing_case = true;
        if (inv.m >= 0) rep.co_value = carlsson_okounkov(req.surface, req.L1, static_cast<int>(inv.m));
        return rep;
    }
    rep.co_value = carlsson_okounkov(req.surface, req.L1, static_cast<int>(inv.m));
    rep.agree = (inv.value.abs() == rep.co_value.abs());
    return rep;
}

} // namespace hilbpairs
