#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hilbpairs {

using Vec2 = std::array<std::int64_t, 2>;

inline Vec2 operator+(Vec2 u, Vec2 v) { return {u[0] + v[0], u[1] + v[1]}; }
inline Vec2 operator-(Vec2 u, Vec2 v) { return {u[0] - v[0], u[1] - v[1]}; }
inline Vec2 operator-(Vec2 u) { return {-u[0], -u[1]}; }
inline Vec2 operator*(std::int64_t c, Vec2 u) { return {c * u[0], c * u[1]}; }
inline std::int64_t dot(Vec2 u, Vec2 v) { return u[0] * v[0] + u[1] * v[1]; }

/// Cohomological weight a*t1 + b*t2 of the monomial character t1^a t2^b.
struct LinearForm {
    std::int64_t a = 0;
    std::int64_t b = 0;

    bool is_zero() const { return a == 0 && b == 0; }
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend auto operator<=>(const LinearForm&, const LinearForm&) = default;

    std::string str() const {
        std::ostringstream os;
        if (is_zero()) return "0";
        bool first = true;
        for (auto [c, name] : {std::pair{a, "t1"}, std::pair{b, "t2"}}) {
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            std::int64_t m = c > 0 ? c : -c;
            if (m != 1) os << m << "*";
            os << name;
            first = false;
        }
        return os.str();
    }
};

inline LinearForm form_of(Vec2 exponent) { return {exponent[0], exponent[1]}; }

struct NormalizedForm {
    LinearForm form;    // primitive, first nonzero entry positive
    std::int64_t scale; // original = scale * form
};

/// Canonical representative of a nonzero linear form: divide out the gcd and
/// fix the sign so the first nonzero coordinate is positive. The extracted
/// integer factor is returned so callers can fold it into a scalar.
inline NormalizedForm normalize(LinearForm w) {
    if (w.is_zero()) throw std::domain_error("normalize: zero linear form");
    std::int64_t x = w.a < 0 ? -w.a : w.a;
    std::int64_t y = w.b < 0 ? -w.b : w.b;
    while (y != 0) { std::int64_t t = x % y; x = y; y = t; }
    std::int64_t g = x;
    LinearForm f{w.a / g, w.b / g};
    std::int64_t scale = g;
    std::int64_t lead = f.a != 0 ? f.a : f.b;
    if (lead < 0) { f.a = -f.a; f.b = -f.b; scale = -scale; }
    return {f, scale};
}

/// Finitely supported Z-linear combination of monomials t1^p t2^q: a virtual
/// torus representation. Zero multiplicities are never stored.
class Character {
public:
    Character() = default;

    static Character monomial(Vec2 e, std::int64_t mult = 1) {
        Character c;
        c.add(e, mult);
        return c;
    }
    static Character one() { return monomial({0, 0}); }

    void add(Vec2 e, std::int64_t mult) {
        if (mult == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) { terms_.emplace(e, mult); return; }
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }

    const std::map<Vec2, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::int64_t rank() const {
        std::int64_t r = 0;
        for (const auto& [e, m] : terms_) r += m;
        return r;
    }

    Character conj() const {
        Character c;
        for (const auto& [e, m] : terms_) c.add(-e, m);
        return c;
    }

    Character& operator+=(const Character& o) {
        for (const auto& [e, m] : o.terms_) add(e, m);
        return *this;
    }
    Character& operator-=(const Character& o) {
        for (const auto& [e, m] : o.terms_) add(e, -m);
        return *this;
    }
    friend Character operator+(Character a, const Character& b) { return a += b; }
    friend Character operator-(Character a, const Character& b) { return a -= b; }

    friend Character operator*(const Character& a, const Character& b) {
        Character c;
        for (const auto& [e1, m1] : a.terms_)
            for (const auto& [e2, m2] : b.terms_) c.add(e1 + e2, m1 * m2);
        return c;
    }

    /// Multiply every term by the monomial t^e.
    Character shifted(Vec2 e) const {
        Character c;
        for (const auto& [f, m] : terms_) c.add(f + e, m);
        return c;
    }

    friend bool operator==(const Character&, const Character&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Character& c) {
        if (c.terms_.empty()) return os << "0";
        bool first = true;
        for (const auto& [e, m] : c.terms_) {
            if (!first) os << " + ";
            os << m << "*t^(" << e[0] << "," << e[1] << ")";
            first = false;
        }
        return os;
    }

private:
    std::map<Vec2, std::int64_t> terms_;
};

} // namespace hilbpairs
