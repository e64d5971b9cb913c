#include "hilbpairs/series.hpp"

#include <stdexcept>

namespace hilbpairs {

Rational HomogeneousPoly::eval(const Rational& t1, const Rational& t2) const {
    // Horner in t2/t1 would need divisions; powers are cheap enough here.
    Rational acc = 0;
    Rational p1 = 1;
    std::vector<Rational> pow1(coeff.size());
    for (std::size_t i = 0; i < coeff.size(); ++i) { pow1[i] = p1; p1 *= t1; }
    Rational p2 = 1;
    for (std::size_t j = 0; j < coeff.size(); ++j) {
        if (!coeff[j].is_zero()) acc += coeff[j] * pow1[coeff.size() - 1 - j] * p2;
        p2 *= t2;
    }
    return acc;
}

HomogeneousPoly mul(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    HomogeneousPoly r = HomogeneousPoly::zero(a.degree + b.degree);
    for (int i = 0; i <= a.degree; ++i) {
        if (a.coeff[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j <= b.degree; ++j) {
            if (b.coeff[static_cast<std::size_t>(j)].is_zero()) continue;
            r.coeff[static_cast<std::size_t>(i + j)] +=
                a.coeff[static_cast<std::size_t>(i)] * b.coeff[static_cast<std::size_t>(j)];
        }
    }
    return r;
}

void add_assign(HomogeneousPoly& a, const HomogeneousPoly& b, const Rational& scale) {
    if (a.degree != b.degree) throw std::invalid_argument("add_assign: degree mismatch");
    for (std::size_t i = 0; i < a.coeff.size(); ++i) a.coeff[i] += scale * b.coeff[i];
}

HomogeneousPoly form_power(LinearForm w, int k) {
    HomogeneousPoly r = HomogeneousPoly::zero(k);
    std::vector<Rational> apow(static_cast<std::size_t>(k) + 1), bpow(static_cast<std::size_t>(k) + 1);
    apow[0] = 1;
    bpow[0] = 1;
    for (int i = 1; i <= k; ++i) {
        apow[static_cast<std::size_t>(i)] = apow[static_cast<std::size_t>(i - 1)] * Rational(w.a);
        bpow[static_cast<std::size_t>(i)] = bpow[static_cast<std::size_t>(i - 1)] * Rational(w.b);
    }
    for (int j = 0; j <= k; ++j)
        r.coeff[static_cast<std::size_t>(j)] =
            binomial(k, j) * apow[static_cast<std::size_t>(k - j)] * bpow[static_cast<std::size_t>(j)];
    return r;
}

GradedPoly::GradedPoly(int t_cap) : t_cap_(t_cap) {
    if (t_cap < 0) throw std::invalid_argument("GradedPoly: negative cap");
    buckets_.reserve(static_cast<std::size_t>(t_cap) + 1);
    for (int d = 0; d <= t_cap; ++d) buckets_.push_back(HomogeneousPoly::zero(d));
}

bool GradedPoly::is_zero() const {
    for (const auto& b : buckets_)
        if (!b.is_zero()) return false;
    return true;
}

Rational GradedPoly::eval(const Rational& t1, const Rational& t2) const {
    Rational acc = 0;
    for (const auto& b : buckets_) acc += b.eval(t1, t2);
    return acc;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    if (o.t_cap_ != t_cap_) throw std::invalid_argument("GradedPoly: cap mismatch");
    for (int d = 0; d <= t_cap_; ++d) add_assign(bucket(d), o.bucket(d));
    return *this;
}

void GradedPoly::add_scaled(const GradedPoly& o, const Rational& c) {
    if (o.t_cap_ != t_cap_) throw std::invalid_argument("GradedPoly: cap mismatch");
    if (c.is_zero()) return;
    for (int d = 0; d <= t_cap_; ++d) add_assign(bucket(d), o.bucket(d), c);
}

GradedPoly GradedPoly::mul(const GradedPoly& o) const {
    if (o.t_cap_ != t_cap_) throw std::invalid_argument("GradedPoly: cap mismatch");
    GradedPoly r(t_cap_);
    for (int d1 = 0; d1 <= t_cap_; ++d1) {
        if (bucket(d1).is_zero()) continue;
        for (int d2 = 0; d1 + d2 <= t_cap_; ++d2) {
            if (o.bucket(d2).is_zero()) continue;
            add_assign(r.bucket(d1 + d2), hilbpairs::mul(bucket(d1), o.bucket(d2)));
        }
    }
    return r;
}

void GradedPoly::scale(const Rational& c) {
    for (auto& b : buckets_)
        for (auto& x : b.coeff) x *= c;
}

BiSeries::BiSeries(int h_cap, int t_cap) : h_cap_(h_cap), t_cap_(t_cap) {
    if (h_cap < 0 || t_cap < 0) throw std::invalid_argument("BiSeries: negative cap");
    coeffs_.assign(static_cast<std::size_t>(h_cap) + 1, GradedPoly(t_cap));
}

BiSeries BiSeries::unit(int h_cap, int t_cap) { return constant(1, h_cap, t_cap); }

BiSeries BiSeries::constant(const Rational& c, int h_cap, int t_cap) {
    BiSeries s(h_cap, t_cap);
    s.coeff(0).bucket(0).coeff[0] = c;
    return s;
}

BiSeries BiSeries::h_power(int n, int h_cap, int t_cap) {
    BiSeries s(h_cap, t_cap);
    if (n < 0) throw std::invalid_argument("BiSeries::h_power: negative power");
    if (n <= h_cap) s.coeff(n).bucket(0).coeff[0] = 1;
    return s;
}

BiSeries BiSeries::affine(const Rational& c0, const Rational& ch, LinearForm w, int h_cap, int t_cap) {
    BiSeries s(h_cap, t_cap);
    s.coeff(0).bucket(0).coeff[0] = c0;
    if (h_cap >= 1) s.coeff(1).bucket(0).coeff[0] = ch;
    if (t_cap >= 1) s.coeff(0).bucket(1) = HomogeneousPoly::linear(w);
    return s;
}

BiSeries BiSeries::binomial_h(int sign, std::int64_t exponent, int h_cap, int t_cap) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("binomial_h: sign must be +-1");
    BiSeries s(h_cap, t_cap);
    Rational sgn_pow = 1;
    for (int k = 0; k <= h_cap; ++k) {
        s.coeff(k).bucket(0).coeff[0] = binomial(exponent, k) * sgn_pow;
        sgn_pow *= Rational(sign);
    }
    return s;
}

BiSeries BiSeries::one_plus_form_power(LinearForm w, std::int64_t exponent, int h_cap, int t_cap) {
    BiSeries s(h_cap, t_cap);
    for (int i = 0; i <= t_cap; ++i) {
        Rational c = binomial(exponent, i);
        if (c.is_zero()) continue;
        HomogeneousPoly wi = form_power(w, i);
        add_assign(s.coeff(0).bucket(i), wi, c);
    }
    return s;
}

BiSeries BiSeries::reciprocal_affine(int ch, LinearForm w, int h_cap, int t_cap) {
    if (ch < -1 || ch > 1) throw std::invalid_argument("reciprocal_affine: ch must be in {-1,0,1}");
    // (1 + u)^{-1} = sum_k (-u)^k with u = ch*h + w; the (h^j, t-degree i)
    // slot receives (-1)^{i+j} C(i+j, j) ch^j w^i.
    BiSeries s(h_cap, t_cap);
    for (int i = 0; i <= t_cap; ++i) {
        HomogeneousPoly wi = form_power(w, i);
        if (wi.is_zero() && i > 0) continue;
        for (int j = 0; j <= h_cap; ++j) {
            if (ch == 0 && j > 0) break;
            Rational c = binomial(i + j, j) * (((i + j) % 2 == 0) ? Rational(1) : Rational(-1));
            if (ch == -1 && j % 2 == 1) c = -c;
            add_assign(s.coeff(j).bucket(i), wi, c);
        }
    }
    return s;
}

bool BiSeries::is_zero() const {
    for (const auto& g : coeffs_)
        if (!g.is_zero()) return false;
    return true;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    if (o.h_cap_ != h_cap_ || o.t_cap_ != t_cap_)
        throw std::invalid_argument("BiSeries: cap mismatch");
    for (int k = 0; k <= h_cap_; ++k) coeff(k) += o.coeff(k);
    return *this;
}

BiSeries BiSeries::mul(const BiSeries& o) const {
    if (o.h_cap_ != h_cap_ || o.t_cap_ != t_cap_)
        throw std::invalid_argument("BiSeries: cap mismatch");
    BiSeries r(h_cap_, t_cap_);
    for (int k1 = 0; k1 <= h_cap_; ++k1) {
        if (coeff(k1).is_zero()) continue;
        for (int k2 = 0; k1 + k2 <= h_cap_; ++k2) {
            if (o.coeff(k2).is_zero()) continue;
            r.coeff(k1 + k2) += coeff(k1).mul(o.coeff(k2));
        }
    }
    return r;
}

BiSeries series_product(const std::vector<BiSeries>& factors, int h_cap, int t_cap) {
    BiSeries acc = BiSeries::unit(h_cap, t_cap);
    for (const auto& f : factors) {
        if (f.h_cap() != h_cap || f.t_cap() != t_cap)
            throw std::invalid_argument("series_product: factor caps differ from requested caps");
        acc = acc.mul(f);
    }
    return acc;
}

BiSeries series_reciprocal(const BiSeries& s) {
    if (s.coeff(0).bucket(0).coeff[0] != Rational(1))
        throw std::domain_error("series_reciprocal: constant term is not 1");
    const int H = s.h_cap(), T = s.t_cap();
    BiSeries x(H, T);
    // Solve s*x = 1 slot by slot in lexicographic (h, t) order; the constant
    // term of s is 1, so each slot of x is determined by earlier ones.
    for (int k = 0; k <= H; ++k) {
        for (int d = 0; d <= T; ++d) {
            HomogeneousPoly acc = HomogeneousPoly::zero(d);
            if (k == 0 && d == 0) acc.coeff[0] = 1;
            for (int j = 0; j <= k; ++j) {
                for (int e = 0; e <= d; ++e) {
                    if (j == 0 && e == 0) continue; // the s constant term
                    const auto& sje = s.coeff(j).bucket(e);
                    if (sje.is_zero()) continue;
                    const auto& xprev = x.coeff(k - j).bucket(d - e);
                    if (xprev.is_zero()) continue;
                    add_assign(acc, mul(sje, xprev), Rational(-1));
                }
            }
            x.coeff(k).bucket(d) = acc;
        }
    }
    return x;
}

HomogeneousPoly extract(const BiSeries& s, int h_power, int t_degree) {
    if (h_power < 0 || h_power > s.h_cap() || t_degree < 0 || t_degree > s.t_cap())
        throw std::invalid_argument("extract: index outside series caps");
    return s.coeff(h_power).bucket(t_degree);
}

} // namespace hilbpairs
