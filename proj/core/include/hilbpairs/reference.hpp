#pragma once

#include <cstdint>
#include <vector>

#include "hilbpairs/invariants.hpp"
#include "hilbpairs/surface.hpp"

namespace hilbpairs {

/// One of the six supported local geometries (surface plus the two twists).
struct GeometrySpec {
    SurfaceKind kind;
    int a;
    std::vector<std::int64_t> L1;
    std::vector<std::int64_t> L2;
    const char* label;
};

const std::vector<GeometrySpec>& reference_geometries();

/// A published invariant value. Entries with `star` set were produced by the
/// fixed-locus vertex computation, not by the surface formula; they are
/// display-only here and excluded from recomputation.
struct GoldenEntry {
    int geometry; // index into reference_geometries()
    std::vector<std::int64_t> beta;
    std::int64_t n;
    std::int64_t value;
    bool dagger = false; // zero with non-empty moduli behind it
    bool star = false;   // vertex-formalism value, outside this engine's scope
};

const std::vector<GoldenEntry>& golden_entries();

/// Degree/holomorphic-Euler table for the canonical twist of P^3. All of it
/// is vertex-formalism data: shipped for display and range documentation
/// only, never recomputed.
struct LocalP3Entry {
    std::int64_t d;
    std::int64_t n;
    std::int64_t value;
    bool dagger = false;
};

const std::vector<LocalP3Entry>& local_p3_display_entries();

SurfaceModel build_geometry_surface(const GeometrySpec& g);
InvariantRequest golden_request(const GeometrySpec& g, const std::vector<std::int64_t>& beta,
                                std::int64_t n);
InvariantRequest golden_request(const GoldenEntry& e);

} // namespace hilbpairs
