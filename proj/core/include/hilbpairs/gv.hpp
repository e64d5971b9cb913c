#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hilbpairs/rational.hpp"
#include "hilbpairs/surface.hpp"

namespace hilbpairs {

/// Exponent of a curve class in the effective monoid; rank-1 geometries pad
/// the second slot with zero.
using GvKey = std::array<std::int64_t, 2>;

/// Truncated element of the monoid ring Q[effective classes]: coefficients
/// live inside the box 0 <= e_i <= cap_i. Arithmetic discards everything
/// outside the box.
class BoxSeries {
public:
    BoxSeries(int rank, GvKey cap);

    int rank() const { return rank_; }
    GvKey cap() const { return cap_; }

    const Rational& at(GvKey e) const;
    void set(GvKey e, Rational v);
    void add(GvKey e, const Rational& v);
    const std::map<GvKey, Rational>& terms() const { return terms_; }
    bool in_box(GvKey e) const;

    BoxSeries mul(const BoxSeries& o) const;
    BoxSeries& operator+=(const BoxSeries& o);
    void scale(const Rational& c);
    /// log(*this); requires constant term 1.
    BoxSeries log() const;
    /// exp(*this); requires constant term 0.
    BoxSeries exp() const;

private:
    int rank_;
    GvKey cap_;
    std::map<GvKey, Rational> terms_;
    static const Rational zero_;
};

/// External table of Gromov-Witten / Gopakumar-Vafa data for one geometry.
/// Values are exact rationals; integrality of the GV numbers is audited by
/// the checks, never assumed.
struct GvDataset {
    SurfaceKind kind = SurfaceKind::P2;
    int a = 0;
    std::vector<std::int64_t> L1, L2;
    int rank = 1;
    GvKey cap{0, 0};
    std::string gamma = "pt";
    std::string provenance;
    bool has_gw0 = false, has_gv0 = false, has_n1 = false;
    std::map<GvKey, Rational> gw0, gv0, n1;
};

GvDataset load_gv_dataset(std::istream& in);
GvDataset load_gv_dataset_file(const std::string& path);

/// Genus-zero multiple cover inversion:
/// n_{0,beta} = GW_{0,beta} - sum_{d >= 2} d^{-2} n_{0,beta/d}.
/// gw0 must cover every effective nonzero class inside the cap box.
std::map<GvKey, Rational> gv0_from_gw0(const std::map<GvKey, Rational>& gw0, int rank, GvKey cap);

/// Resummation sum_{d >= 1} d^{-2} n_{0,beta/d}; the exact inverse of
/// gv0_from_gw0, used for round-trip checks.
std::map<GvKey, Rational> gw0_from_gv0(const std::map<GvKey, Rational>& gv0, int rank, GvKey cap);

/// The genus-zero wall-crossing prediction: coefficient of q^beta in
/// P0 * gv0^n over ordered effective decompositions; tuples containing a
/// zero class in a gv0 slot contribute nothing.
Rational predict_P_g0(const std::map<GvKey, Rational>& P0, const std::map<GvKey, Rational>& gv0,
                      int rank, GvKey cap, GvKey beta, std::int64_t n);

/// MacMahon function prod_k (1-q^k)^{-k} through q^max_degree.
std::vector<Rational> macmahon_series(int max_degree);

/// Exponents n_{1,beta} solving P0 series = prod_beta M(q^beta)^{n_1,beta}
/// inside the cap box. P0 must have constant term 1.
std::map<GvKey, Rational> solve_n1(const std::map<GvKey, Rational>& P0, int rank, GvKey cap);

struct CheckRow {
    GvKey beta{0, 0};
    std::int64_t n = -1; // -1 for rows keyed by beta only
    Rational computed;
    Rational predicted;
    bool pass = false;
    bool skipped = false;
    std::string note;
};

struct CheckReport {
    std::vector<CheckRow> rows;
    std::vector<std::string> integrality_flags; // non-integer GV values, reported not rejected
    bool all_pass = true;                       // over non-skipped rows
};

/// Genus-zero conjecture check: engine P_{n,beta} against the prediction,
/// for every effective beta <= cap and 1 <= n <= n_max. Rows outside the
/// classified isomorphism range are reported as skipped.
CheckReport check_conj_g0(const GvDataset& dataset, std::int64_t n_max);

/// Genus-one conjecture check: engine P_0 series against the MacMahon
/// product built from the dataset's n1 table (or from solve_n1 on the
/// engine's own series when the dataset carries none).
CheckReport check_conj_g1(const GvDataset& dataset);

/// Engine-computed P_{0,beta} for every effective beta in the box.
std::map<GvKey, Rational> engine_P0_box(const GvDataset& dataset);

} // namespace hilbpairs
