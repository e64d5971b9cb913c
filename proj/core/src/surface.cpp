#include "hilbpairs/surface.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hilbpairs {

namespace {

Chart make_chart(const std::vector<Vec2>& rays, int i, int j) {
    Vec2 v1 = rays[static_cast<std::size_t>(i)];
    Vec2 v2 = rays[static_cast<std::size_t>(j)];
    std::int64_t det = v1[0] * v2[1] - v2[0] * v1[1];
    if (det != 1 && det != -1)
        throw std::invalid_argument("make_chart: cone is not smooth");
    // Rows of the inverse of the matrix with columns v1, v2.
    Vec2 m1{v2[1] / det, -v2[0] / det};
    Vec2 m2{-v1[1] / det, v1[0] / det};
    return Chart{{i, j}, m1, m2};
}

std::vector<std::int64_t> class_of_lift(const SurfaceModel& S,
                                        const std::vector<std::int64_t>& lift) {
    std::vector<std::int64_t> cls(static_cast<std::size_t>(S.picard_rank), 0);
    for (std::size_t r = 0; r < S.rays.size(); ++r)
        for (int c = 0; c < S.picard_rank; ++c)
            cls[static_cast<std::size_t>(c)] += lift[r] * S.ray_class[r][static_cast<std::size_t>(c)];
    return cls;
}

} // namespace

SurfaceModel build_surface(SurfaceKind kind, int a) {
    SurfaceModel S;
    S.kind = kind;
    switch (kind) {
    case SurfaceKind::P2:
        S.a = 0;
        S.picard_rank = 1;
        S.euler = 3;
        S.rays = {{1, 0}, {0, 1}, {-1, -1}};
        S.intersection = {{1}};
        S.ray_class = {{1}, {1}, {1}};
        S.name = "P2";
        break;
    case SurfaceKind::P1xP1:
        S.a = 0;
        S.picard_rank = 2;
        S.euler = 4;
        S.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        S.intersection = {{0, 1}, {1, 0}};
        S.ray_class = {{1, 0}, {0, 1}, {1, 0}, {0, 1}};
        S.name = "P1xP1";
        break;
    case SurfaceKind::Fa:
        if (a < 1) throw std::invalid_argument("build_surface: F_a needs a >= 1");
        S.a = a;
        S.picard_rank = 2;
        S.euler = 4;
        S.rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
        // Basis (B, F): B = D_{(0,1)}, F = D_{(1,0)} ~ D_{(-1,a)},
        // D_{(0,-1)} = B + a F.
        S.intersection = {{-a, 1}, {1, 0}};
        S.ray_class = {{0, 1}, {1, 0}, {0, 1}, {1, a}};
        S.name = "F" + std::to_string(a);
        break;
    }
    const int n = static_cast<int>(S.rays.size());
    for (int i = 0; i < n; ++i) S.charts.push_back(make_chart(S.rays, i, (i + 1) % n));

    S.canonical.ray_lift.assign(S.rays.size(), -1);
    S.canonical.pic = class_of_lift(S, S.canonical.ray_lift);
    return S;
}

DivisorClass divisor(const SurfaceModel& S, const std::vector<std::int64_t>& pic) {
    if (pic.size() != static_cast<std::size_t>(S.picard_rank))
        throw std::invalid_argument("divisor: wrong number of coefficients for " + S.name);
    DivisorClass D;
    D.pic = pic;
    D.ray_lift.assign(S.rays.size(), 0);
    switch (S.kind) {
    case SurfaceKind::P2:
        // d H -> d * D_{(-1,-1)}
        D.ray_lift[2] = pic[0];
        break;
    case SurfaceKind::P1xP1:
        // (a, b) -> a * D_{(1,0)} + b * D_{(0,1)}
        D.ray_lift[0] = pic[0];
        D.ray_lift[1] = pic[1];
        break;
    case SurfaceKind::Fa:
        // d1 B + d2 F -> d1 * D_{(0,1)} + d2 * D_{(1,0)}
        D.ray_lift[1] = pic[0];
        D.ray_lift[0] = pic[1];
        break;
    }
    return D;
}

DivisorClass divisor_with_lift(const SurfaceModel& S, const std::vector<std::int64_t>& pic,
                               const std::vector<std::int64_t>& ray_lift) {
    if (ray_lift.size() != S.rays.size())
        throw std::invalid_argument("divisor_with_lift: wrong number of ray coefficients");
    DivisorClass D;
    D.pic = pic;
    D.ray_lift = ray_lift;
    if (class_of_lift(S, ray_lift) != pic)
        throw std::invalid_argument("divisor_with_lift: lift is not in the stated class");
    return D;
}

DivisorClass relift(const SurfaceModel& S, const DivisorClass& D, Vec2 u, std::int64_t k) {
    DivisorClass E = D;
    for (std::size_t r = 0; r < S.rays.size(); ++r) E.ray_lift[r] += k * dot(u, S.rays[r]);
    return E;
}

DivisorClass add(const SurfaceModel& S, const DivisorClass& D, const DivisorClass& E) {
    (void)S;
    DivisorClass R = D;
    for (std::size_t i = 0; i < R.pic.size(); ++i) R.pic[i] += E.pic[i];
    for (std::size_t r = 0; r < R.ray_lift.size(); ++r) R.ray_lift[r] += E.ray_lift[r];
    return R;
}

DivisorClass negate(const SurfaceModel& S, const DivisorClass& D) {
    (void)S;
    DivisorClass R = D;
    for (auto& c : R.pic) c = -c;
    for (auto& c : R.ray_lift) c = -c;
    return R;
}

bool is_zero_class(const DivisorClass& D) {
    for (auto c : D.pic)
        if (c != 0) return false;
    return true;
}

std::int64_t intersect(const SurfaceModel& S, const DivisorClass& D, const DivisorClass& E) {
    std::int64_t acc = 0;
    for (int i = 0; i < S.picard_rank; ++i)
        for (int j = 0; j < S.picard_rank; ++j)
            acc += D.pic[static_cast<std::size_t>(i)] *
                   S.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   E.pic[static_cast<std::size_t>(j)];
    return acc;
}

std::int64_t riemann_roch_chi(const SurfaceModel& S, const DivisorClass& D) {
    std::int64_t dd = intersect(S, D, D) - intersect(S, D, S.canonical);
    if (dd % 2 != 0) throw std::logic_error("riemann_roch_chi: odd self-pairing");
    return 1 + dd / 2;
}

std::int64_t point_count_m(const SurfaceModel& S, const DivisorClass& beta, std::int64_t n) {
    std::int64_t bb = intersect(S, beta, beta) + intersect(S, beta, S.canonical);
    if (bb % 2 != 0) throw std::logic_error("point_count_m: odd adjunction pairing");
    return n + bb / 2;
}

Vec2 vertex_character(const SurfaceModel& S, const Chart& chart, const DivisorClass& D) {
    std::int64_t a1 = D.ray_lift[static_cast<std::size_t>(chart.rays[0])];
    std::int64_t a2 = D.ray_lift[static_cast<std::size_t>(chart.rays[1])];
    return (-a1) * chart.m1 + (-a2) * chart.m2;
}

CohomologyDims cohomology_dims(const SurfaceModel& S, const DivisorClass& D) {
    const int n = static_cast<int>(S.rays.size());
    std::int64_t box = 2;
    for (auto c : D.ray_lift) box += (c < 0 ? -c : c);

    CohomologyDims dims;
    std::vector<bool> violated(static_cast<std::size_t>(n));
    for (std::int64_t x = -box; x <= box; ++x) {
        for (std::int64_t y = -box; y <= box; ++y) {
            int count = 0;
            for (int r = 0; r < n; ++r) {
                bool v = dot({x, y}, S.rays[static_cast<std::size_t>(r)]) <
                         -D.ray_lift[static_cast<std::size_t>(r)];
                violated[static_cast<std::size_t>(r)] = v;
                if (v) ++count;
            }
            if (count == 0) {
                ++dims.h0;
            } else if (count == n) {
                ++dims.h2;
            } else {
                // Number of circular arcs of violated rays; k arcs contribute
                // k - 1 to H^1.
                int arcs = 0;
                for (int r = 0; r < n; ++r)
                    if (violated[static_cast<std::size_t>(r)] &&
                        !violated[static_cast<std::size_t>((r + n - 1) % n)])
                        ++arcs;
                dims.h1 += arcs - 1;
            }
        }
    }
    return dims;
}

bool is_effective(const SurfaceModel& S, const DivisorClass& beta) {
    (void)S;
    for (auto c : beta.pic)
        if (c < 0) return false;
    return true;
}

std::vector<std::vector<DivisorClass>> effective_decompositions(const SurfaceModel& S,
                                                                const DivisorClass& beta,
                                                                int parts) {
    if (parts < 1) throw std::invalid_argument("effective_decompositions: parts must be >= 1");
    std::vector<std::vector<DivisorClass>> out;
    if (!is_effective(S, beta)) return out;

    std::vector<DivisorClass> current(static_cast<std::size_t>(parts));
    std::vector<std::int64_t> remaining = beta.pic;

    // Walk ordered tuples; each coordinate splits independently.
    auto rec = [&](auto&& self, int slot) -> void {
        if (slot == parts - 1) {
            current[static_cast<std::size_t>(slot)] = divisor(S, remaining);
            out.push_back(current);
            return;
        }
        std::vector<std::int64_t> piece(remaining.size(), 0);
        auto iterate = [&](auto&& inner, std::size_t coord) -> void {
            if (coord == remaining.size()) {
                current[static_cast<std::size_t>(slot)] = divisor(S, piece);
                std::vector<std::int64_t> saved = remaining;
                for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] -= piece[i];
                self(self, slot + 1);
                remaining = saved;
                return;
            }
            for (std::int64_t v = 0; v <= remaining[coord]; ++v) {
                piece[coord] = v;
                inner(inner, coord + 1);
            }
            piece[coord] = 0;
        };
        iterate(iterate, 0);
    };
    rec(rec, 0);
    return out;
}

} // namespace hilbpairs
