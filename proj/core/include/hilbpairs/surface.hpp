#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbpairs/character.hpp"

namespace hilbpairs {

enum class SurfaceKind { P2, P1xP1, Fa };

/// Maximal torus-invariant affine chart, one per 2-dimensional cone of the
/// fan. m1, m2 are the coordinate weight vectors: the dual basis of the
/// cone's two rays, so the chart coordinate functions x, y transform with
/// weights t^m1, t^m2 and the tangent weights at the fixed point are
/// t^{-m1}, t^{-m2}.
struct Chart {
    std::array<int, 2> rays; // indices into SurfaceModel::rays
    Vec2 m1{};
    Vec2 m2{};
};

/// Class in the Picard lattice together with a chosen lift to toric divisor
/// coefficients (one per ray). Characters depend on the lift; every computed
/// invariant does not, which is covered by tests rather than assumed.
struct DivisorClass {
    std::vector<std::int64_t> pic;
    std::vector<std::int64_t> ray_lift;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

struct SurfaceModel {
    SurfaceKind kind = SurfaceKind::P2;
    int a = 0; // Hirzebruch parameter; 0 unless kind == Fa
    int picard_rank = 1;
    int euler = 3; // = number of charts
    std::vector<Vec2> rays; // primitive generators in circular order
    std::vector<Chart> charts;
    std::vector<std::vector<std::int64_t>> intersection; // r x r pairing in the Picard basis
    std::vector<std::vector<std::int64_t>> ray_class;    // Picard class of each toric divisor D_rho
    DivisorClass canonical;                              // K_S, lifted as -sum of all D_rho
    std::string name;
};

/// P^2, P^1 x P^1, or the Hirzebruch surface F_a (a >= 1, pass via `a`).
/// Basis conventions: H on P^2; (H1, H2) on P^1 x P^1; (B, F) on F_a with
/// B^2 = -a, B.F = 1, F^2 = 0.
SurfaceModel build_surface(SurfaceKind kind, int a = 0);

/// Divisor class from Picard coefficients using the surface's pinned lift.
DivisorClass divisor(const SurfaceModel& S, const std::vector<std::int64_t>& pic);
/// Divisor class with an explicit ray lift; throws unless the lift's class
/// equals `pic`.
DivisorClass divisor_with_lift(const SurfaceModel& S, const std::vector<std::int64_t>& pic,
                               const std::vector<std::int64_t>& ray_lift);
/// Same class, lift changed by k * div(x^u). Used to test lift independence.
DivisorClass relift(const SurfaceModel& S, const DivisorClass& D, Vec2 u, std::int64_t k);

DivisorClass add(const SurfaceModel& S, const DivisorClass& D, const DivisorClass& E);
DivisorClass negate(const SurfaceModel& S, const DivisorClass& D);
bool is_zero_class(const DivisorClass& D);

std::int64_t intersect(const SurfaceModel& S, const DivisorClass& D, const DivisorClass& E);

/// chi(O_S(D)) = 1 + D.(D - K)/2.
std::int64_t riemann_roch_chi(const SurfaceModel& S, const DivisorClass& D);

/// m = n + beta.(beta + K)/2; may be negative (the caller maps m < 0 to a
/// vanishing invariant).
std::int64_t point_count_m(const SurfaceModel& S, const DivisorClass& beta, std::int64_t n);

/// The lattice point u with <u, v_rho> = -a_rho for the chart's two rays;
/// the character of D restricted to the chart is t^u.
Vec2 vertex_character(const SurfaceModel& S, const Chart& chart, const DivisorClass& D);

struct CohomologyDims {
    std::int64_t h0 = 0, h1 = 0, h2 = 0;
    friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// Dimensions of H^i(S, O(D)) by the lattice scan: for each weight u the
/// rays with <u, v_rho> < -a_rho form a set of circular arcs, and the arc
/// topology decides which cohomology group u feeds.
CohomologyDims cohomology_dims(const SurfaceModel& S, const DivisorClass& D);

bool is_effective(const SurfaceModel& S, const DivisorClass& beta);

/// All ordered `parts`-tuples of effective classes summing to beta.
std::vector<std::vector<DivisorClass>> effective_decompositions(const SurfaceModel& S,
                                                                const DivisorClass& beta,
                                                                int parts);

} // namespace hilbpairs
