#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hilbpairs/surface.hpp"

namespace hilbpairs {

enum class ModuliStatus {
    IsoProper,    // P_n(X,beta) proper and equal to P_n(S,beta), non-empty story known
    ProperNotIso, // proper, but pairs thickened off the surface contribute
    NonProper,    // support can escape the zero section
    EmptyModuli,  // no stable pairs at all
    Unknown,      // outside the classified geometries / ranges
};

std::string to_string(ModuliStatus s);

struct Status {
    ModuliStatus value = ModuliStatus::Unknown;
    std::string note; // which criterion decided it
    friend bool operator==(const Status& a, const Status& b) { return a.value == b.value; }
};

/// True iff every effective nonzero subclass beta' <= beta pairs strictly
/// negatively with both twists; then the moduli space is projective for
/// every n.
bool properness_by_negativity(const SurfaceModel& S, const DivisorClass& L1,
                              const DivisorClass& L2, const DivisorClass& beta);

struct NWindow {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool contains(std::int64_t n) const { return lo <= n && n <= hi; }
    bool empty() const { return lo > hi; }
    friend bool operator==(const NWindow&, const NWindow&) = default;
};

/// Necessary window of n for properness with non-empty surface moduli, given
/// a splitting beta = [C1 + C2] with C1 a line generator pairing to zero
/// with L1 or L2: n must lie in [-beta(beta+K)/2, -C2(C2+K)/2]. Returns
/// nothing when the hypotheses fail. The window may be empty (lo > hi).
std::optional<NWindow> properness_window(const SurfaceModel& S, const DivisorClass& L1,
                                         const DivisorClass& L2, const DivisorClass& beta,
                                         const DivisorClass& C1, const DivisorClass& C2);

/// Sufficient bound: n <= returned value forces P_n(X,beta) = P_n(S,beta).
/// Defined for the two geometries with ample duals; on P1xP1 it needs both
/// degrees >= 2 and includes the sharpened (3,3) bound admitting n = 0.
std::optional<std::int64_t> iso_bound(const SurfaceModel& S, const DivisorClass& L1,
                                      const DivisorClass& L2, const DivisorClass& beta);

/// Moduli status from the transcribed classification of the six supported
/// local geometries; Unknown for anything else.
Status classify_reference(const SurfaceModel& S, const DivisorClass& L1, const DivisorClass& L2,
                          const DivisorClass& beta, std::int64_t n);

} // namespace hilbpairs
