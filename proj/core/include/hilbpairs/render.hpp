#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilbpairs/invariants.hpp"
#include "hilbpairs/surface.hpp"

namespace hilbpairs {

/// "P2", "P1xP1", "F1", "F2", or "Fa:<a>" for a >= 3.
std::string surface_name(SurfaceKind kind, int a);
/// Inverse of surface_name; accepts "Fa:<a>" for any a >= 1.
void parse_surface_name(const std::string& text, SurfaceKind& kind, int& a);

/// Comma-joined integers matching the CLI divisor syntax, e.g. "-1,-2".
std::string divisor_text(const std::vector<std::int64_t>& coeffs);
std::vector<std::int64_t> parse_divisor_text(const std::string& text);

/// One invariant as a machine-readable line:
///   surface L1 L2 beta n value status
std::string machine_line(const SurfaceModel& S, const DivisorClass& L1, const DivisorClass& L2,
                         const DivisorClass& beta, std::int64_t n, const Rational& value,
                         const Status& status);

struct ParsedMachineLine {
    SurfaceKind kind;
    int a;
    std::vector<std::int64_t> L1, L2, beta;
    std::int64_t n;
    Rational value;
    std::string status;
};

ParsedMachineLine parse_machine_line(const std::string& line);

} // namespace hilbpairs
