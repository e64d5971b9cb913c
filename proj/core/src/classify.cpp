#include "hilbpairs/classify.hpp"

#include <algorithm>
#include <vector>

namespace hilbpairs {

std::string to_string(ModuliStatus s) {
    switch (s) {
    case ModuliStatus::IsoProper: return "iso_proper";
    case ModuliStatus::ProperNotIso: return "proper_not_iso";
    case ModuliStatus::NonProper: return "non_proper";
    case ModuliStatus::EmptyModuli: return "empty";
    case ModuliStatus::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

enum class Geometry { P2, P1xP1Sym, P1xP1Nef, F1Nef1, F1Nef2, F2, Other };

bool pair_matches(const DivisorClass& L1, const DivisorClass& L2,
                  const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    return (L1.pic == a && L2.pic == b) || (L1.pic == b && L2.pic == a);
}

Geometry identify(const SurfaceModel& S, const DivisorClass& L1, const DivisorClass& L2) {
    switch (S.kind) {
    case SurfaceKind::P2:
        if (pair_matches(L1, L2, {-1}, {-2})) return Geometry::P2;
        break;
    case SurfaceKind::P1xP1:
        if (pair_matches(L1, L2, {-1, -1}, {-1, -1})) return Geometry::P1xP1Sym;
        if (pair_matches(L1, L2, {-1, 0}, {-1, -2})) return Geometry::P1xP1Nef;
        break;
    case SurfaceKind::Fa:
        if (S.a == 1) {
            if (pair_matches(L1, L2, {-1, -1}, {-1, -2})) return Geometry::F1Nef1;
            if (pair_matches(L1, L2, {0, -1}, {-2, -2})) return Geometry::F1Nef2;
        }
        if (S.a == 2 && pair_matches(L1, L2, {-1, -2}, {-1, -2})) return Geometry::F2;
        break;
    }
    return Geometry::Other;
}

bool in_iso_range(Geometry g, std::int64_t d1, std::int64_t d2, std::int64_t n) {
    switch (g) {
    case Geometry::P2: {
        std::int64_t d = d1;
        if (d == 1) return true;
        if (d >= 2 && d <= 4 && n <= 1) return true;
        if ((d == 2 || d == 3) && n == 2) return true;
        return false;
    }
    case Geometry::P1xP1Sym: {
        std::int64_t lo = std::min(d1, d2), hi = std::max(d1, d2);
        if (lo == 0 && hi == 1) return true;
        if (lo == 1 && hi == 1) return true;
        if (lo == 0 && hi >= 2) return n <= hi;
        if (lo == 1 && hi >= 2) return n <= 2;
        if (n == 0) return (lo == 2 && hi <= 4) || (lo == 3 && hi == 3);
        if (n == 1) return lo == 2 && hi <= 3;
        if (n == 2) return lo == 2 && hi == 2;
        return false;
    }
    case Geometry::P1xP1Nef: {
        if (d1 == 0 && d2 == 1) return true;
        if (d1 == 0 && d2 >= 2) return n == d2;
        if (n == 0)
            return (d1 == 2 && d2 >= 2 && d2 <= 4) || (d1 == 3 && d2 == 2);
        if (n == 1)
            return (d1 == 2 && (d2 == 2 || d2 == 3)) || (d1 == 1 && d2 >= 1) ||
                   (d2 == 1 && d1 >= 1);
        if (n == 2) return d1 == 1 && d2 >= 2;
        return false;
    }
    case Geometry::F1Nef1: {
        if (d1 == 0 && d2 == 1) return true;
        if (d1 == 0 && d2 >= 2) return n == d2;
        if (n == 0)
            return (d1 == 2 && d2 >= 3 && d2 <= 5) || (d1 == 3 && d2 == 3);
        if (d1 == 2 && n == 1) return d2 >= 2 && d2 <= 4;
        if (d1 == 1) return (n == 1 || n == 2) && d2 >= n;
        return false;
    }
    case Geometry::F1Nef2: {
        if (n == 0) return (d1 == 2 && (d2 == 3 || d2 == 4)) || (d1 == 3 && d2 == 3);
        if (n == 1) return (d1 == 2 && (d2 == 2 || d2 == 3)) || (d1 == 1 && d2 >= 1);
        return false;
    }
    case Geometry::F2: {
        if (d1 == 0 && d2 == 1) return true;
        if (d1 == 0 && d2 >= 2) return n == d2;
        if (n == 0) return d1 == 2 && d2 >= 4 && d2 <= 6;
        if (d1 == 2 && n == 1) return d2 >= 3 && d2 <= 5;
        if (d1 == 1) return (n == 1 || n == 2) && d2 >= n;
        return false;
    }
    case Geometry::Other: return false;
    }
    return false;
}

std::vector<DivisorClass> line_generators(const SurfaceModel& S) {
    std::vector<DivisorClass> gens;
    if (S.picard_rank == 1) {
        gens.push_back(divisor(S, {1}));
    } else {
        gens.push_back(divisor(S, {1, 0}));
        gens.push_back(divisor(S, {0, 1}));
    }
    return gens;
}

} // namespace

bool properness_by_negativity(const SurfaceModel& S, const DivisorClass& L1,
                              const DivisorClass& L2, const DivisorClass& beta) {
    if (!is_effective(S, beta)) return false;
    // Walk every effective nonzero subclass componentwise.
    std::vector<std::int64_t> sub(beta.pic.size(), 0);
    auto rec = [&](auto&& self, std::size_t coord) -> bool {
        if (coord == sub.size()) {
            bool zero = true;
            for (auto c : sub)
                if (c != 0) zero = false;
            if (zero) return true;
            DivisorClass bp = divisor(S, sub);
            return intersect(S, bp, L1) < 0 && intersect(S, bp, L2) < 0;
        }
        for (std::int64_t v = 0; v <= beta.pic[coord]; ++v) {
            sub[coord] = v;
            if (!self(self, coord + 1)) return false;
        }
        sub[coord] = 0;
        return true;
    };
    return rec(rec, 0);
}

std::optional<NWindow> properness_window(const SurfaceModel& S, const DivisorClass& L1,
                                         const DivisorClass& L2, const DivisorClass& beta,
                                         const DivisorClass& C1, const DivisorClass& C2) {
    bool generator = false;
    for (const auto& g : line_generators(S))
        if (g.pic == C1.pic) generator = true;
    if (!generator) return std::nullopt;
    if (intersect(S, C1, L1) != 0 && intersect(S, C1, L2) != 0) return std::nullopt;
    DivisorClass sum = add(S, C1, C2);
    if (sum.pic != beta.pic) return std::nullopt;
    if (!is_effective(S, C2)) return std::nullopt;

    auto half_adjunction = [&](const DivisorClass& D) {
        std::int64_t v = intersect(S, D, D) + intersect(S, D, S.canonical);
        return -v / 2;
    };
    return NWindow{half_adjunction(beta), half_adjunction(C2)};
}

std::optional<std::int64_t> iso_bound(const SurfaceModel& S, const DivisorClass& L1,
                                      const DivisorClass& L2, const DivisorClass& beta) {
    Geometry g = identify(S, L1, L2);
    if (g == Geometry::P2) {
        std::int64_t d = beta.pic[0];
        if (d < 1) return std::nullopt;
        return (-d * d + 5 * d - 2) / 2;
    }
    if (g == Geometry::P1xP1Sym) {
        std::int64_t d1 = beta.pic[0], d2 = beta.pic[1];
        if (d1 < 2 || d2 < 2) return std::nullopt;
        if (d1 == 3 && d2 == 3) return 0; // sharpened bound for (3,3)
        return d1 + d2 - d1 * d2 + 2;
    }
    return std::nullopt;
}

Status classify_reference(const SurfaceModel& S, const DivisorClass& L1, const DivisorClass& L2,
                          const DivisorClass& beta, std::int64_t n) {
    Geometry g = identify(S, L1, L2);
    if (g == Geometry::Other)
        return {ModuliStatus::Unknown, "geometry outside the classified list"};

    if (is_zero_class(beta)) {
        if (n == 0) return {ModuliStatus::IsoProper, "degree zero convention"};
        return {ModuliStatus::EmptyModuli, "no pure one-dimensional sheaf in class zero"};
    }
    if (!is_effective(S, beta)) return {ModuliStatus::EmptyModuli, "class is not effective"};

    std::int64_t m = point_count_m(S, beta, n);
    std::int64_t d1 = beta.pic[0];
    std::int64_t d2 = S.picard_rank > 1 ? beta.pic[1] : 0;

    if (in_iso_range(g, d1, d2, n)) {
        if (m < 0) return {ModuliStatus::EmptyModuli, "relative Hilbert scheme empty (m < 0)"};
        return {ModuliStatus::IsoProper, "classified isomorphism range"};
    }

    const bool ample = (g == Geometry::P2 || g == Geometry::P1xP1Sym);
    if (ample) {
        if (m < 0) return {ModuliStatus::EmptyModuli, "relative Hilbert scheme empty (m < 0)"};
        return {ModuliStatus::ProperNotIso,
                "projective for every n; pairs thickened off the surface contribute"};
    }

    if (properness_by_negativity(S, L1, L2, beta)) {
        if (m < 0) return {ModuliStatus::EmptyModuli, "relative Hilbert scheme empty (m < 0)"};
        return {ModuliStatus::ProperNotIso,
                "projective by negative pairing, outside the isomorphism range"};
    }

    if (m < 0) return {ModuliStatus::EmptyModuli, "relative Hilbert scheme empty (m < 0)"};

    bool any_window = false;
    bool all_contain = true;
    for (const auto& c1 : line_generators(S)) {
        std::vector<std::int64_t> rest = beta.pic;
        bool rest_effective = true;
        for (std::size_t i = 0; i < rest.size(); ++i) {
            rest[i] -= c1.pic[i];
            if (rest[i] < 0) rest_effective = false;
        }
        if (!rest_effective) continue;
        auto w = properness_window(S, L1, L2, beta, c1, divisor(S, rest));
        if (!w) continue;
        any_window = true;
        if (!w->contains(n)) all_contain = false;
    }
    if (any_window && all_contain)
        return {ModuliStatus::ProperNotIso,
                "inside every properness window, outside the isomorphism range"};
    if (any_window)
        return {ModuliStatus::NonProper,
                "properness window violated with non-empty surface moduli"};
    return {ModuliStatus::Unknown, "no properness criterion applies"};
}

} // namespace hilbpairs
