#pragma once

#include <cstdint>
#include <vector>

#include "hilbpairs/character.hpp"
#include "hilbpairs/rational.hpp"

namespace hilbpairs {

/// Homogeneous polynomial in t1, t2 of fixed total degree; coeff[j] is the
/// coefficient of t1^(degree-j) t2^j.
struct HomogeneousPoly {
    int degree = 0;
    std::vector<Rational> coeff; // size degree + 1

    static HomogeneousPoly zero(int degree) {
        return {degree, std::vector<Rational>(static_cast<std::size_t>(degree) + 1)};
    }
    static HomogeneousPoly one() { return {0, {Rational(1)}}; }
    static HomogeneousPoly linear(LinearForm w) { return {1, {Rational(w.a), Rational(w.b)}}; }

    bool is_zero() const {
        for (const auto& c : coeff)
            if (!c.is_zero()) return false;
        return true;
    }

    Rational eval(const Rational& t1, const Rational& t2) const;

    friend bool operator==(const HomogeneousPoly&, const HomogeneousPoly&) = default;
};

HomogeneousPoly mul(const HomogeneousPoly& a, const HomogeneousPoly& b);
void add_assign(HomogeneousPoly& a, const HomogeneousPoly& b, const Rational& scale = 1);
/// w^k, expanded binomially.
HomogeneousPoly form_power(LinearForm w, int k);

/// Polynomial in t1, t2 with rational coefficients, stored as homogeneous
/// buckets of total degree 0..t_cap; higher degrees are discarded.
class GradedPoly {
public:
    explicit GradedPoly(int t_cap);

    int t_cap() const { return t_cap_; }
    const HomogeneousPoly& bucket(int d) const { return buckets_[static_cast<std::size_t>(d)]; }
    HomogeneousPoly& bucket(int d) { return buckets_[static_cast<std::size_t>(d)]; }

    bool is_zero() const;
    Rational eval(const Rational& t1, const Rational& t2) const;

    GradedPoly& operator+=(const GradedPoly& o);
    void add_scaled(const GradedPoly& o, const Rational& c);
    GradedPoly mul(const GradedPoly& o) const;
    void scale(const Rational& c);

    friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

private:
    int t_cap_;
    std::vector<HomogeneousPoly> buckets_;
};

/// Element of Q[t1, t2][h] truncated at h-degree h_cap and t-degree t_cap.
/// h is the nilpotent hyperplane variable of the linear system factor; t1, t2
/// carry the torus weights. Caps are fixed at construction and never grow.
class BiSeries {
public:
    BiSeries(int h_cap, int t_cap);

    int h_cap() const { return h_cap_; }
    int t_cap() const { return t_cap_; }
    const GradedPoly& coeff(int h_power) const { return coeffs_[static_cast<std::size_t>(h_power)]; }
    GradedPoly& coeff(int h_power) { return coeffs_[static_cast<std::size_t>(h_power)]; }

    static BiSeries unit(int h_cap, int t_cap);
    static BiSeries constant(const Rational& c, int h_cap, int t_cap);
    /// h^n; the zero series when n exceeds h_cap.
    static BiSeries h_power(int n, int h_cap, int t_cap);
    /// c0 + ch*h + w.
    static BiSeries affine(const Rational& c0, const Rational& ch, LinearForm w, int h_cap, int t_cap);
    /// (1 + sign*h)^exponent for sign in {+1,-1}; exponent may be negative.
    static BiSeries binomial_h(int sign, std::int64_t exponent, int h_cap, int t_cap);
    /// (1 + w)^exponent; exponent may be negative.
    static BiSeries one_plus_form_power(LinearForm w, std::int64_t exponent, int h_cap, int t_cap);
    /// (1 + ch*h + w)^{-1} for ch in {-1, 0, +1}, built coefficientwise.
    static BiSeries reciprocal_affine(int ch, LinearForm w, int h_cap, int t_cap);

    bool is_zero() const;
    BiSeries& operator+=(const BiSeries& o);
    BiSeries mul(const BiSeries& o) const; // throws std::invalid_argument on cap mismatch

    friend bool operator==(const BiSeries&, const BiSeries&) = default;

private:
    int h_cap_;
    int t_cap_;
    std::vector<GradedPoly> coeffs_;
};

/// Truncated product of the given factors; the empty product is the unit.
/// All factors must carry exactly the given caps.
BiSeries series_product(const std::vector<BiSeries>& factors, int h_cap, int t_cap);

/// Multiplicative inverse up to the caps. The constant term (h^0, t-degree 0)
/// must be exactly 1.
BiSeries series_reciprocal(const BiSeries& s);

/// The homogeneous piece at the given bidegree. Indices must lie within caps.
HomogeneousPoly extract(const BiSeries& s, int h_power, int t_degree);

} // namespace hilbpairs
