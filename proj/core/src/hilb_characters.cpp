#include "hilbpairs/hilb_characters.hpp"

#include <sstream>

#include "hilbpairs/errors.hpp"

namespace hilbpairs {

Character partition_character(const Partition& lambda, const Chart& chart) {
    Character z;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.parts[static_cast<std::size_t>(i)]; ++j)
            z.add(static_cast<std::int64_t>(i) * chart.m1 + static_cast<std::int64_t>(j) * chart.m2,
                  1);
    return z;
}

Character structure_sheaf_sections(const SurfaceModel& S, const FixedPoint& Z,
                                   const DivisorClass& D) {
    Character acc;
    for (std::size_t c = 0; c < S.charts.size(); ++c) {
        const Partition& lambda = Z.parts[c];
        if (lambda.empty()) continue;
        Vec2 u = vertex_character(S, S.charts[c], D);
        acc += partition_character(lambda, S.charts[c]).shifted(u);
    }
    return acc;
}

std::vector<LinearForm> taut_weights(const SurfaceModel& S, const FixedPoint& Z,
                                     const DivisorClass& D) {
    std::vector<LinearForm> weights;
    for (std::size_t c = 0; c < S.charts.size(); ++c) {
        const Partition& lambda = Z.parts[c];
        if (lambda.empty()) continue;
        Vec2 u = vertex_character(S, S.charts[c], D);
        for (int i = 0; i < lambda.length(); ++i)
            for (int j = 0; j < lambda.parts[static_cast<std::size_t>(i)]; ++j)
                weights.push_back(form_of(u + static_cast<std::int64_t>(i) * S.charts[c].m1 +
                                          static_cast<std::int64_t>(j) * S.charts[c].m2));
    }
    return weights;
}

Character twisted_tangent_character(const SurfaceModel& S, const FixedPoint& Z,
                                    const DivisorClass& L) {
    Character acc;
    for (std::size_t c = 0; c < S.charts.size(); ++c) {
        const Partition& lambda = Z.parts[c];
        if (lambda.empty()) continue;
        const Chart& chart = S.charts[c];
        Vec2 u = vertex_character(S, chart, L);
        Vec2 tau12 = chart.m1 + chart.m2;

        Character z = partition_character(lambda, chart);
        Character zc = z.conj();

        // (1 - tau1)(1 - tau2) / (tau1 tau2)
        Character hook = (Character::one() - Character::monomial(chart.m1)) *
                         (Character::one() - Character::monomial(chart.m2));
        hook = hook.shifted(-tau12);

        Character local = z + zc.shifted(-tau12) - z * zc * hook;
        acc += local.shifted(u);
    }
    return acc;
}

std::vector<LinearForm> tangent_weights(const SurfaceModel& S, const FixedPoint& Z) {
    DivisorClass trivial = divisor(S, std::vector<std::int64_t>(
                                          static_cast<std::size_t>(S.picard_rank), 0));
    Character t = twisted_tangent_character(S, Z, trivial);
    std::vector<LinearForm> weights;
    for (const auto& [e, mult] : t.terms()) {
        if (e[0] == 0 && e[1] == 0) {
            std::ostringstream os;
            os << "tangent_weights: zero weight with multiplicity " << mult
               << " at a fixed point of size " << Z.size();
            throw consistency_error(os.str());
        }
        if (mult < 0)
            throw consistency_error("tangent_weights: negative multiplicity after cancellation");
        for (std::int64_t k = 0; k < mult; ++k) weights.push_back(form_of(e));
    }
    if (static_cast<int>(weights.size()) != 2 * Z.size())
        throw consistency_error("tangent_weights: expected exactly 2m weights");
    return weights;
}

} // namespace hilbpairs
