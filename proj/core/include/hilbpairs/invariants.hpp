#pragma once

#include <cstdint>
#include <string>

#include "hilbpairs/classify.hpp"
#include "hilbpairs/fixed_points.hpp"
#include "hilbpairs/fractions.hpp"
#include "hilbpairs/rational.hpp"
#include "hilbpairs/surface.hpp"

namespace hilbpairs {

/// One stable pair invariant P_{n,beta}([pt]) of Tot_S(L1 + L2).
/// Construction validates L1 + L2 = K_S in the Picard lattice and n >= 0.
struct InvariantRequest {
    SurfaceModel surface;
    DivisorClass L1, L2, beta;
    std::int64_t n = 0;

    InvariantRequest(SurfaceModel S, DivisorClass L1_, DivisorClass L2_, DivisorClass beta_,
                     std::int64_t n_);
};

enum class VanishingReason {
    None,
    BetaZero,         // beta = 0 with n > 0
    BetaNotEffective,
    BetaSqNegative,
    ChiNonpositive,
    MNegative,
};

std::string to_string(VanishingReason r);

struct InvariantResult {
    Rational value;
    std::int64_t m = 0;
    std::int64_t chi_beta = 0;
    std::int64_t beta_sq = 0;
    std::int64_t beta_dot_L2 = 0;
    int sign = 1; // (-1)^(beta.L2 + n)
    VanishingReason vanishing = VanishingReason::None;
    Status classification;
};

/// The localization summand of one torus-fixed point: the coefficient of
/// h^(chi(beta)-1) in t-degree 2m of
///   prod(h + w_i) h^n (1+h)^chi(beta+L1) (1-h)^chi(beta+L2) c(V_Z(L1))
///   / [ prod(1 + h + w') prod(1 - h - w'') ]
/// over the tangent Euler class. Requires m >= 0 and chi(beta) >= 1.
LinearFraction fixed_point_contribution(const InvariantRequest& req, const FixedPoint& Z);

/// Full invariant: vanishing guards in priority order, then the signed
/// localization sum over the fixed points of S^[m].
InvariantResult stable_pair_invariant(const InvariantRequest& req);

/// Euler number of the twisted tangent bundle on S^[m], by the same
/// localization (no linear system factor, no orientation sign).
Rational carlsson_okounkov(const SurfaceModel& S, const DivisorClass& L1, int m);

/// Coefficients of prod_k (1-q^k)^(-c) through q^max_m with
/// c = e(S) - L1.L2: the closed product form the Euler numbers satisfy.
std::vector<Rational> carlsson_okounkov_series(const SurfaceModel& S, const DivisorClass& L1,
                                               const DivisorClass& L2, int max_m);

struct CoReport {
    Rational invariant;
    Rational co_value;
    std::int64_t m = 0;
    bool vanishing_case = false; // invariant vanished or m < 0, nothing to compare
    bool agree = false;          // |invariant| == co_value
};

/// Diagnostic comparison of |P_{n,beta}| against the twisted-tangent Euler
/// number at the matching m. Never asserts; callers decide what to report.
CoReport co_coincidence_report(const InvariantRequest& req);

} // namespace hilbpairs
