#pragma once

#include <vector>

#include "hilbpairs/character.hpp"
#include "hilbpairs/fixed_points.hpp"
#include "hilbpairs/surface.hpp"

namespace hilbpairs {

/// Z_lambda in the global torus variables: the sum of t^{(i-1) m1 + (j-1) m2}
/// over boxes (i, j) of the partition, 1-based, row index i along m1.
Character partition_character(const Partition& lambda, const Chart& chart);

/// Sum of chi_sigma(D) * Z_{lambda_sigma} over all charts: the class of
/// H^0(O(D)|_Z), of rank |Z|.
Character structure_sheaf_sections(const SurfaceModel& S, const FixedPoint& Z,
                                   const DivisorClass& D);

/// The m Chern roots of the tautological bundle O(D)^[m] at Z, as linear
/// forms; zero weights are allowed.
std::vector<LinearForm> taut_weights(const SurfaceModel& S, const FixedPoint& Z,
                                     const DivisorClass& D);

/// Restriction of the twisted tangent class T_{S^[m]}(L) to the fixed point:
/// per chart, with tau_i = t^{m_i} and chi = chi_sigma(L),
///   chi * ( Z + conj(Z)/(tau1 tau2) - Z conj(Z) (1-tau1)(1-tau2)/(tau1 tau2) ).
/// Rank 2m. The middle term is the Serre-duality contribution chi(O_Z, L);
/// the tests on Hilb^1 and the arm/leg identity pin the convention.
Character twisted_tangent_character(const SurfaceModel& S, const FixedPoint& Z,
                                    const DivisorClass& L);

/// The 2m weights of the Hilbert scheme tangent space at Z (the twisted
/// tangent character at L = O). Throws consistency_error if a weight is zero
/// or appears with negative multiplicity after cancellation.
std::vector<LinearForm> tangent_weights(const SurfaceModel& S, const FixedPoint& Z);

} // namespace hilbpairs
