#include "hilbpairs/gv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hilbpairs/invariants.hpp"
#include "hilbpairs/reference.hpp"

namespace hilbpairs {

const Rational BoxSeries::zero_ = Rational(0);

BoxSeries::BoxSeries(int rank, GvKey cap) : rank_(rank), cap_(cap) {
    if (rank != 1 && rank != 2) throw std::invalid_argument("BoxSeries: rank must be 1 or 2");
    if (rank == 1) cap_[1] = 0;
    if (cap_[0] < 0 || cap_[1] < 0) throw std::invalid_argument("BoxSeries: negative cap");
}

bool BoxSeries::in_box(GvKey e) const {
    return e[0] >= 0 && e[1] >= 0 && e[0] <= cap_[0] && e[1] <= cap_[1];
}

const Rational& BoxSeries::at(GvKey e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? zero_ : it->second;
}

void BoxSeries::set(GvKey e, Rational v) {
    if (!in_box(e)) return;
    if (v.is_zero()) terms_.erase(e);
    else terms_[e] = std::move(v);
}

void BoxSeries::add(GvKey e, const Rational& v) {
    if (!in_box(e) || v.is_zero()) return;
    Rational& slot = terms_[e];
    slot += v;
    if (slot.is_zero()) terms_.erase(e);
}

BoxSeries BoxSeries::mul(const BoxSeries& o) const {
    if (o.rank_ != rank_ || o.cap_ != cap_) throw std::invalid_argument("BoxSeries: cap mismatch");
    BoxSeries r(rank_, cap_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            GvKey e{e1[0] + e2[0], e1[1] + e2[1]};
            if (r.in_box(e)) r.add(e, c1 * c2);
        }
    return r;
}

BoxSeries& BoxSeries::operator+=(const BoxSeries& o) {
    if (o.rank_ != rank_ || o.cap_ != cap_) throw std::invalid_argument("BoxSeries: cap mismatch");
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

void BoxSeries::scale(const Rational& c) {
    if (c.is_zero()) { terms_.clear(); return; }
    for (auto& [e, v] : terms_) v *= c;
}

BoxSeries BoxSeries::log() const {
    if (at({0, 0}) != Rational(1)) throw std::invalid_argument("BoxSeries::log: constant term not 1");
    BoxSeries a = *this;
    a.set({0, 0}, 0); // a is nilpotent in the box
    BoxSeries acc(rank_, cap_);
    BoxSeries power = a;
    int max_order = static_cast<int>(cap_[0] + cap_[1]);
    for (int k = 1; k <= max_order; ++k) {
        BoxSeries term = power;
        term.scale(Rational((k % 2 == 1) ? 1 : -1, k));
        acc += term;
        if (k < max_order) power = power.mul(a);
    }
    return acc;
}

BoxSeries BoxSeries::exp() const {
    if (!at({0, 0}).is_zero()) throw std::invalid_argument("BoxSeries::exp: constant term not 0");
    BoxSeries acc(rank_, cap_);
    acc.set({0, 0}, 1);
    BoxSeries power = *this;
    Rational factorial = 1;
    int max_order = static_cast<int>(cap_[0] + cap_[1]);
    for (int k = 1; k <= max_order; ++k) {
        factorial *= Rational(k);
        BoxSeries term = power;
        term.scale(Rational(1) / factorial);
        acc += term;
        if (k < max_order) power = power.mul(*this);
    }
    return acc;
}

namespace {

std::vector<GvKey> box_keys(int rank, GvKey cap, bool include_zero) {
    std::vector<GvKey> keys;
    std::int64_t hi2 = rank == 1 ? 0 : cap[1];
    for (std::int64_t t = 0; t <= cap[0] + hi2; ++t)
        for (std::int64_t x = 0; x <= cap[0]; ++x) {
            std::int64_t y = t - x;
            if (y < 0 || y > hi2) continue;
            if (!include_zero && x == 0 && y == 0) continue;
            keys.push_back({x, y});
        }
    return keys;
}

SurfaceKind parse_kind(const std::string& s, int& a) {
    if (s == "P2") return SurfaceKind::P2;
    if (s == "P1xP1") return SurfaceKind::P1xP1;
    if (s == "F1") { a = 1; return SurfaceKind::Fa; }
    if (s == "F2") { a = 2; return SurfaceKind::Fa; }
    if (s == "Fa") return SurfaceKind::Fa; // parameter comes from the "a" field
    throw std::invalid_argument("gv dataset: unknown surface kind: " + s);
}

std::map<GvKey, Rational> parse_value_table(const nlohmann::json& arr, int rank) {
    std::map<GvKey, Rational> table;
    for (const auto& item : arr) {
        const auto& b = item.at("beta");
        if (static_cast<int>(b.size()) != rank)
            throw std::invalid_argument("gv dataset: beta arity does not match the surface");
        GvKey key{b.at(0).get<std::int64_t>(), rank == 2 ? b.at(1).get<std::int64_t>() : 0};
        if (key[0] < 0 || key[1] < 0 || (key[0] == 0 && key[1] == 0))
            throw std::invalid_argument("gv dataset: keys must be effective and nonzero");
        Rational value = Rational::parse(item.at("value").get<std::string>());
        if (!table.emplace(key, value).second)
            throw std::invalid_argument("gv dataset: duplicate beta entry");
    }
    return table;
}

} // namespace

GvDataset load_gv_dataset(std::istream& in) {
    nlohmann::json j;
    in >> j;
    GvDataset d;
    const auto& surf = j.at("surface");
    int a = surf.contains("a") ? surf.at("a").get<int>() : 0;
    d.kind = parse_kind(surf.at("kind").get<std::string>(), a);
    d.a = a;
    d.rank = d.kind == SurfaceKind::P2 ? 1 : 2;
    for (const auto& c : j.at("L1")) d.L1.push_back(c.get<std::int64_t>());
    for (const auto& c : j.at("L2")) d.L2.push_back(c.get<std::int64_t>());
    if (static_cast<int>(d.L1.size()) != d.rank || static_cast<int>(d.L2.size()) != d.rank)
        throw std::invalid_argument("gv dataset: twist arity does not match the surface");
    d.gamma = j.value("gamma", std::string("pt"));
    if (d.gamma != "pt")
        throw std::invalid_argument("gv dataset: only the point insertion is supported");
    d.provenance = j.value("provenance", std::string());
    const auto& cap = j.at("cap");
    if (static_cast<int>(cap.size()) != d.rank)
        throw std::invalid_argument("gv dataset: cap arity does not match the surface");
    d.cap = {cap.at(0).get<std::int64_t>(), d.rank == 2 ? cap.at(1).get<std::int64_t>() : 0};
    if (j.contains("gw0")) { d.gw0 = parse_value_table(j.at("gw0"), d.rank); d.has_gw0 = true; }
    if (j.contains("gv0")) { d.gv0 = parse_value_table(j.at("gv0"), d.rank); d.has_gv0 = true; }
    if (j.contains("n1")) { d.n1 = parse_value_table(j.at("n1"), d.rank); d.has_n1 = true; }
    if (!d.has_gw0 && !d.has_gv0 && !d.has_n1)
        throw std::invalid_argument("gv dataset: no gw0, gv0, or n1 table present");
    return d;
}

GvDataset load_gv_dataset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("gv dataset: cannot open " + path);
    return load_gv_dataset(in);
}

std::map<GvKey, Rational> gv0_from_gw0(const std::map<GvKey, Rational>& gw0, int rank, GvKey cap) {
    std::map<GvKey, Rational> n0;
    for (GvKey beta : box_keys(rank, cap, false)) {
        auto it = gw0.find(beta);
        if (it == gw0.end()) {
            std::ostringstream os;
            os << "gv0_from_gw0: gw0 is missing beta = (" << beta[0] << "," << beta[1] << ")";
            throw std::invalid_argument(os.str());
        }
        Rational v = it->second;
        std::int64_t max_d = std::max(beta[0], beta[1]);
        for (std::int64_t d = 2; d <= max_d; ++d) {
            if (beta[0] % d != 0 || beta[1] % d != 0) continue;
            GvKey sub{beta[0] / d, beta[1] / d};
            v -= Rational(1, static_cast<long>(d * d)) * n0.at(sub);
        }
        n0[beta] = v;
    }
    return n0;
}

std::map<GvKey, Rational> gw0_from_gv0(const std::map<GvKey, Rational>& gv0, int rank, GvKey cap) {
    std::map<GvKey, Rational> gw;
    for (GvKey beta : box_keys(rank, cap, false)) {
        Rational v = 0;
        std::int64_t max_d = std::max(beta[0], beta[1]);
        for (std::int64_t d = 1; d <= max_d; ++d) {
            if (beta[0] % d != 0 || beta[1] % d != 0) continue;
            GvKey sub{beta[0] / d, beta[1] / d};
            auto it = gv0.find(sub);
            if (it != gv0.end()) v += Rational(1, static_cast<long>(d * d)) * it->second;
        }
        gw[beta] = v;
    }
    return gw;
}

Rational predict_P_g0(const std::map<GvKey, Rational>& P0, const std::map<GvKey, Rational>& gv0,
                      int rank, GvKey cap, GvKey beta, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("predict_P_g0: n must be >= 1");
    // Missing map entries count as zero; datasets validate their own
    // coverage separately.
    BoxSeries p0(rank, cap);
    for (const auto& [key, value] : P0) p0.set(key, value);
    BoxSeries g(rank, cap);
    for (const auto& [key, value] : gv0) {
        if (key[0] == 0 && key[1] == 0)
            throw std::invalid_argument("predict_P_g0: gv0 must not contain the zero class");
        g.set(key, value); // the zero class never enters: n_{0,0} = 0
    }
    BoxSeries acc = p0;
    for (std::int64_t i = 0; i < n; ++i) acc = acc.mul(g);
    return acc.at(beta);
}

std::vector<Rational> macmahon_series(int max_degree) {
    std::vector<Rational> coeff(static_cast<std::size_t>(max_degree) + 1);
    coeff[0] = 1;
    for (int k = 1; k <= max_degree; ++k) {
        std::vector<Rational> next = coeff;
        for (int j = 1; k * j <= max_degree; ++j) {
            Rational b = binomial(k + j - 1, j); // (1-q^k)^{-k}
            for (int i = 0; i + k * j <= max_degree; ++i)
                next[static_cast<std::size_t>(i + k * j)] += b * coeff[static_cast<std::size_t>(i)];
        }
        coeff = std::move(next);
    }
    return coeff;
}

namespace {

/// Coefficient of q^r in log M(q): sigma_2(r) / r.
Rational log_macmahon_coeff(std::int64_t r) {
    std::int64_t s2 = 0;
    for (std::int64_t d = 1; d <= r; ++d)
        if (r % d == 0) s2 += d * d;
    return Rational(static_cast<long>(s2), static_cast<long>(r));
}

BoxSeries log_macmahon_at(GvKey beta, int rank, GvKey cap) {
    BoxSeries acc(rank, cap);
    for (std::int64_t r = 1;; ++r) {
        GvKey e{r * beta[0], r * beta[1]};
        if (!acc.in_box(e)) break;
        acc.set(e, log_macmahon_coeff(r));
    }
    return acc;
}

} // namespace

std::map<GvKey, Rational> solve_n1(const std::map<GvKey, Rational>& P0, int rank, GvKey cap) {
    auto it0 = P0.find({0, 0});
    if (it0 == P0.end() || it0->second != Rational(1))
        throw std::invalid_argument("solve_n1: P_{0,0} must be 1");
    BoxSeries p0(rank, cap);
    p0.set({0, 0}, 1);
    for (const auto& [key, value] : P0) p0.set(key, value);
    BoxSeries f = p0.log();
    // Solve F = sum_beta n1[beta] * logM(q^beta) in increasing total degree;
    // the r = 1 term of logM has coefficient 1, so each n1[beta] peels off.
    std::map<GvKey, Rational> n1;
    for (GvKey beta : box_keys(rank, cap, false)) {
        Rational v = f.at(beta);
        std::int64_t max_r = std::max(beta[0], beta[1]);
        for (std::int64_t r = 2; r <= max_r; ++r) {
            if (beta[0] % r != 0 || beta[1] % r != 0) continue;
            GvKey sub{beta[0] / r, beta[1] / r};
            auto it = n1.find(sub);
            if (it != n1.end()) v -= log_macmahon_coeff(r) * it->second;
        }
        if (!v.is_zero()) n1[beta] = v;
    }
    return n1;
}

std::map<GvKey, Rational> engine_P0_box(const GvDataset& dataset) {
    const GeometrySpec spec{dataset.kind, dataset.a, dataset.L1, dataset.L2, ""};
    std::map<GvKey, Rational> p0;
    for (GvKey key : box_keys(dataset.rank, dataset.cap, true)) {
        std::vector<std::int64_t> beta(static_cast<std::size_t>(dataset.rank));
        beta[0] = key[0];
        if (dataset.rank == 2) beta[1] = key[1];
        p0[key] = stable_pair_invariant(golden_request(spec, beta, 0)).value;
    }
    return p0;
}

CheckReport check_conj_g0(const GvDataset& dataset, std::int64_t n_max) {
    if (!dataset.has_gv0 && !dataset.has_gw0)
        throw std::invalid_argument("check_conj_g0: dataset has neither gv0 nor gw0");
    std::map<GvKey, Rational> gv0 = dataset.has_gv0
                                        ? dataset.gv0
                                        : gv0_from_gw0(dataset.gw0, dataset.rank, dataset.cap);
    // A dataset gap is missing data, not an implicit zero.
    for (GvKey key : box_keys(dataset.rank, dataset.cap, false))
        if (!gv0.count(key)) {
            std::ostringstream os;
            os << "check_conj_g0: dataset gv0 is missing beta = (" << key[0] << "," << key[1]
               << ") inside its cap box";
            throw std::invalid_argument(os.str());
        }

    CheckReport report;
    for (const auto& [key, value] : gv0)
        if (!value.is_integer()) {
            std::ostringstream os;
            os << "n0(" << key[0] << "," << key[1] << ") = " << value << " is not an integer";
            report.integrality_flags.push_back(os.str());
        }

    const GeometrySpec spec{dataset.kind, dataset.a, dataset.L1, dataset.L2, ""};
    std::map<GvKey, Rational> p0 = engine_P0_box(dataset);

    SurfaceModel S = build_surface(dataset.kind, dataset.a);
    DivisorClass L1 = divisor(S, dataset.L1);
    DivisorClass L2 = divisor(S, dataset.L2);

    for (GvKey key : box_keys(dataset.rank, dataset.cap, false)) {
        for (std::int64_t n = 1; n <= n_max; ++n) {
            std::vector<std::int64_t> beta(static_cast<std::size_t>(dataset.rank));
            beta[0] = key[0];
            if (dataset.rank == 2) beta[1] = key[1];
            CheckRow row;
            row.beta = key;
            row.n = n;
            Status status = classify_reference(S, L1, L2, divisor(S, beta), n);
            if (status.value != ModuliStatus::IsoProper &&
                status.value != ModuliStatus::EmptyModuli) {
                row.skipped = true;
                row.note = "outside isomorphism range (" + to_string(status.value) + ")";
                report.rows.push_back(std::move(row));
                continue;
            }
            row.computed = stable_pair_invariant(golden_request(spec, beta, n)).value;
            row.predicted = predict_P_g0(p0, gv0, dataset.rank, dataset.cap, key, n);
            row.pass = (row.computed == row.predicted);
            if (!row.pass) report.all_pass = false;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

CheckReport check_conj_g1(const GvDataset& dataset) {
    CheckReport report;
    std::map<GvKey, Rational> p0 = engine_P0_box(dataset);
    std::map<GvKey, Rational> n1 =
        dataset.has_n1 ? dataset.n1 : solve_n1(p0, dataset.rank, dataset.cap);

    for (const auto& [key, value] : n1)
        if (!value.is_integer()) {
            std::ostringstream os;
            os << "n1(" << key[0] << "," << key[1] << ") = " << value << " is not an integer";
            report.integrality_flags.push_back(os.str());
        }

    BoxSeries logprod(dataset.rank, dataset.cap);
    for (const auto& [beta, exponent] : n1) {
        BoxSeries lm = log_macmahon_at(beta, dataset.rank, dataset.cap);
        lm.scale(exponent);
        logprod += lm;
    }
    BoxSeries prod = logprod.exp();

    for (GvKey key : box_keys(dataset.rank, dataset.cap, true)) {
        CheckRow row;
        row.beta = key;
        row.computed = p0.at(key);
        row.predicted = prod.at(key);
        row.pass = (row.computed == row.predicted);
        row.note = "P0 series coefficient";
        if (!row.pass) report.all_pass = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace hilbpairs
