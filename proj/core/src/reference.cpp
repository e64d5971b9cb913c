#include "hilbpairs/reference.hpp"

namespace hilbpairs {

const std::vector<GeometrySpec>& reference_geometries() {
    static const std::vector<GeometrySpec> geometries = {
        {SurfaceKind::P2, 0, {-1}, {-2}, "P2 O(-1)+O(-2)"},
        {SurfaceKind::P1xP1, 0, {-1, -1}, {-1, -1}, "P1xP1 O(-1,-1)+O(-1,-1)"},
        {SurfaceKind::P1xP1, 0, {-1, 0}, {-1, -2}, "P1xP1 O(-1,0)+O(-1,-2)"},
        {SurfaceKind::Fa, 1, {-1, -1}, {-1, -2}, "F1 O(-1,-1)+O(-1,-2)"},
        {SurfaceKind::Fa, 1, {0, -1}, {-2, -2}, "F1 O(0,-1)+O(-2,-2)"},
        {SurfaceKind::Fa, 2, {-1, -2}, {-1, -2}, "F2 O(-1,-2)+O(-1,-2)"},
    };
    return geometries;
}

namespace {

std::vector<GoldenEntry> make_golden_entries() {
    std::vector<GoldenEntry> v;
    auto put = [&](int g, std::vector<std::int64_t> beta, std::int64_t n, std::int64_t value,
                   bool dagger = false, bool star = false) {
        v.push_back(GoldenEntry{g, std::move(beta), n, value, dagger, star});
    };

    // ---- geometry 0: P2 with O(-1), O(-2); beta = d H ----
    put(0, {1}, 0, 0);
    put(0, {1}, 1, -1);
    put(0, {1}, 2, 0, true);
    put(0, {1}, 3, 0, true);
    put(0, {1}, 4, 0, true);
    put(0, {2}, 0, 0);
    put(0, {2}, 1, 1);
    put(0, {2}, 2, 1);
    put(0, {2}, 3, 0, true, true);
    put(0, {3}, 0, -1);
    put(0, {3}, 1, -1);
    put(0, {3}, 2, -2);
    put(0, {4}, 0, 2);
    put(0, {4}, 1, 3);

    // ---- geometry 1: P1xP1 with O(-1,-1) twice; beta = (d1, d2) ----
    // n = 0 grid
    put(1, {0, 0}, 0, 1);
    for (std::int64_t d = 1; d <= 4; ++d) put(1, {0, d}, 0, 0);
    for (std::int64_t d = 0; d <= 4; ++d) put(1, {1, d}, 0, 0);
    put(1, {2, 0}, 0, 0);
    put(1, {2, 1}, 0, 0);
    put(1, {2, 2}, 0, 1);
    put(1, {2, 3}, 0, 2);
    put(1, {2, 4}, 0, 5);
    put(1, {3, 0}, 0, 0);
    put(1, {3, 1}, 0, 0);
    put(1, {3, 2}, 0, 2);
    put(1, {3, 3}, 0, 10);
    put(1, {4, 0}, 0, 0);
    put(1, {4, 1}, 0, 0);
    put(1, {4, 2}, 0, 5);
    // n = 1 grid
    put(1, {0, 0}, 1, 0);
    put(1, {0, 1}, 1, 1);
    put(1, {0, 2}, 1, 0);
    put(1, {0, 3}, 1, 0);
    put(1, {0, 4}, 1, 0);
    for (std::int64_t d = 0; d <= 4; ++d) put(1, {1, d}, 1, 1);
    put(1, {2, 0}, 1, 0);
    put(1, {2, 1}, 1, 1);
    put(1, {2, 2}, 1, 2);
    put(1, {2, 3}, 1, 5);
    put(1, {3, 0}, 1, 0);
    put(1, {3, 1}, 1, 1);
    put(1, {3, 2}, 1, 5);
    put(1, {4, 0}, 1, 0);
    put(1, {4, 1}, 1, 1);
    // n = 2 grid
    put(1, {0, 0}, 2, 0);
    put(1, {0, 1}, 2, 0, true);
    put(1, {0, 2}, 2, 1);
    put(1, {0, 3}, 2, 0);
    put(1, {0, 4}, 2, 0);
    put(1, {1, 0}, 2, 0, true);
    put(1, {1, 1}, 2, 2);
    put(1, {1, 2}, 2, 2);
    put(1, {1, 3}, 2, 2);
    put(1, {1, 4}, 2, 2);
    put(1, {2, 0}, 2, 1);
    put(1, {2, 1}, 2, 2);
    put(1, {2, 2}, 2, 5);
    put(1, {3, 0}, 2, 0);
    put(1, {3, 1}, 2, 2);
    put(1, {4, 0}, 2, 0);
    put(1, {4, 1}, 2, 2);
    // n = 3 grid (star cells are vertex-formalism values)
    put(1, {0, 0}, 3, 0);
    put(1, {0, 1}, 3, 0, true);
    put(1, {0, 2}, 3, 0, true, true);
    put(1, {0, 3}, 3, 1);
    put(1, {0, 4}, 3, 0);
    put(1, {1, 0}, 3, 0, true);
    put(1, {1, 1}, 3, 0, true);
    put(1, {1, 2}, 3, 3, false, true);
    put(1, {2, 0}, 3, 0, true, true);
    put(1, {2, 1}, 3, 3, false, true);
    put(1, {3, 0}, 3, 1);
    put(1, {4, 0}, 3, 0);
    // rule families beyond the grids
    put(1, {1, 5}, 1, 1);
    put(1, {5, 1}, 1, 1);
    put(1, {1, 5}, 2, 2);
    put(1, {5, 1}, 2, 2);
    put(1, {1, 1}, 4, 0, true);
    put(1, {0, 4}, 4, 1);
    put(1, {4, 0}, 4, 1);

    // ---- geometry 2: P1xP1 with O(-1,0), O(-1,-2) ----
    put(2, {2, 2}, 0, 1);
    put(2, {2, 3}, 0, 2);
    put(2, {2, 4}, 0, 5);
    put(2, {3, 2}, 0, 2);
    put(2, {2, 2}, 1, 2);
    put(2, {2, 3}, 1, 5);
    for (std::int64_t d = 1; d <= 4; ++d) {
        put(2, {d, 1}, 1, 1);
        if (d >= 2) put(2, {1, d}, 1, 1);
    }
    put(2, {1, 2}, 2, 2);
    put(2, {1, 3}, 2, 2);
    put(2, {1, 4}, 2, 2);
    put(2, {0, 1}, 2, 0, true);
    put(2, {0, 1}, 3, 0, true);
    for (std::int64_t n = 1; n <= 4; ++n) put(2, {0, n}, n, 1);

    // ---- geometry 3: F1 with O(-1,-1), O(-1,-2); beta = d1 B + d2 F ----
    // n = 0 grid
    put(3, {0, 0}, 0, 1);
    for (std::int64_t d = 1; d <= 7; ++d) put(3, {0, d}, 0, 0);
    for (std::int64_t d = 0; d <= 7; ++d) put(3, {1, d}, 0, 0);
    for (std::int64_t d = 0; d <= 2; ++d) put(3, {2, d}, 0, 0);
    put(3, {2, 3}, 0, 1);
    put(3, {2, 4}, 0, 2);
    put(3, {2, 5}, 0, 5);
    for (std::int64_t d = 0; d <= 2; ++d) put(3, {3, d}, 0, 0);
    put(3, {3, 3}, 0, -1);
    // n = 1 grid; (1,0) is omitted (non-proper moduli, no invariant defined)
    put(3, {0, 0}, 1, 0);
    put(3, {0, 1}, 1, 1);
    for (std::int64_t d = 2; d <= 7; ++d) put(3, {0, d}, 1, 0);
    for (std::int64_t d = 1; d <= 7; ++d) put(3, {1, d}, 1, -1);
    put(3, {2, 0}, 1, 0);
    put(3, {2, 1}, 1, 0);
    put(3, {2, 2}, 1, 1);
    put(3, {2, 3}, 1, 2);
    put(3, {2, 4}, 1, 5);
    put(3, {3, 0}, 1, 0);
    put(3, {3, 1}, 1, 0);
    put(3, {3, 2}, 1, 0);
    // rule families
    put(3, {1, 2}, 2, -2);
    put(3, {1, 3}, 2, -2);
    put(3, {1, 4}, 2, -2);
    put(3, {0, 2}, 3, 0, true, true);
    put(3, {0, 1}, 2, 0, true);
    put(3, {0, 1}, 3, 0, true);
    for (std::int64_t n = 1; n <= 4; ++n) put(3, {0, n}, n, 1);

    // ---- geometry 4: F1 with O(0,-1), O(-2,-2) ----
    // n = 0 grid
    put(4, {0, 0}, 0, 1);
    for (std::int64_t d = 1; d <= 4; ++d) put(4, {0, d}, 0, 0);
    for (std::int64_t d = 0; d <= 4; ++d) put(4, {1, d}, 0, 0);
    for (std::int64_t d = 0; d <= 2; ++d) put(4, {2, d}, 0, 0);
    put(4, {2, 3}, 0, 1);
    put(4, {2, 4}, 0, 2);
    for (std::int64_t d = 0; d <= 2; ++d) put(4, {3, d}, 0, 0);
    put(4, {3, 3}, 0, -1);
    // n = 1 grid; (0,1) and (1,0) are omitted (non-proper moduli)
    put(4, {0, 0}, 1, 0);
    put(4, {0, 2}, 1, 0);
    put(4, {0, 3}, 1, 0);
    put(4, {0, 4}, 1, 0);
    for (std::int64_t d = 1; d <= 4; ++d) put(4, {1, d}, 1, -1);
    put(4, {2, 0}, 1, 0);
    put(4, {2, 1}, 1, 0);
    put(4, {2, 2}, 1, 1);
    put(4, {2, 3}, 1, 2);
    put(4, {3, 0}, 1, 0);
    put(4, {3, 1}, 1, 0);
    put(4, {3, 2}, 1, 0);

    // ---- geometry 5: F2 with O(-1,-2) twice ----
    // n = 0 grid
    put(5, {0, 0}, 0, 1);
    for (std::int64_t d = 1; d <= 7; ++d) put(5, {0, d}, 0, 0);
    for (std::int64_t d = 0; d <= 7; ++d) put(5, {1, d}, 0, 0);
    for (std::int64_t d = 0; d <= 3; ++d) put(5, {2, d}, 0, 0);
    put(5, {2, 4}, 0, 1);
    put(5, {2, 5}, 0, 2);
    put(5, {2, 6}, 0, 5);
    // n = 1 grid; (1,0) omitted (non-proper moduli)
    put(5, {0, 0}, 1, 0);
    put(5, {0, 1}, 1, 1);
    for (std::int64_t d = 2; d <= 7; ++d) put(5, {0, d}, 1, 0);
    for (std::int64_t d = 1; d <= 7; ++d) put(5, {1, d}, 1, 1);
    for (std::int64_t d = 0; d <= 2; ++d) put(5, {2, d}, 1, 0);
    put(5, {2, 3}, 1, 1);
    put(5, {2, 4}, 1, 2);
    put(5, {2, 5}, 1, 5);
    // rule families
    put(5, {1, 2}, 2, 2);
    put(5, {1, 3}, 2, 2);
    put(5, {1, 4}, 2, 2);
    put(5, {0, 1}, 2, 0, true);
    put(5, {0, 1}, 3, 0, true);
    for (std::int64_t n = 1; n <= 4; ++n) put(5, {0, n}, n, 1);

    return v;
}

} // namespace

const std::vector<GoldenEntry>& golden_entries() {
    static const std::vector<GoldenEntry> entries = make_golden_entries();
    return entries;
}

const std::vector<LocalP3Entry>& local_p3_display_entries() {
    static const std::vector<LocalP3Entry> entries = {
        {1, 0, 0},     {1, 1, -20},    {1, 2, 0, true}, {1, 3, 0, true}, {1, 4, 0, true},
        {2, 0, 0},     {2, 1, -820},   {2, 2, 400},     {3, 0, 11200},   {3, 1, -68060},
    };
    return entries;
}

SurfaceModel build_geometry_surface(const GeometrySpec& g) { return build_surface(g.kind, g.a); }

InvariantRequest golden_request(const GeometrySpec& g, const std::vector<std::int64_t>& beta,
                                std::int64_t n) {
    SurfaceModel S = build_geometry_surface(g);
    DivisorClass L1 = divisor(S, g.L1);
    DivisorClass L2 = divisor(S, g.L2);
    DivisorClass b = divisor(S, beta);
    return InvariantRequest(std::move(S), std::move(L1), std::move(L2), std::move(b), n);
}

InvariantRequest golden_request(const GoldenEntry& e) {
    return golden_request(reference_geometries()[static_cast<std::size_t>(e.geometry)], e.beta,
                          e.n);
}

} // namespace hilbpairs
