#include "hilbpairs/render.hpp"

#include <sstream>
#include <stdexcept>

namespace hilbpairs {

std::string surface_name(SurfaceKind kind, int a) {
    switch (kind) {
    case SurfaceKind::P2: return "P2";
    case SurfaceKind::P1xP1: return "P1xP1";
    case SurfaceKind::Fa:
        if (a == 1) return "F1";
        if (a == 2) return "F2";
        return "Fa:" + std::to_string(a);
    }
    return "P2";
}

void parse_surface_name(const std::string& text, SurfaceKind& kind, int& a) {
    a = 0;
    if (text == "P2") { kind = SurfaceKind::P2; return; }
    if (text == "P1xP1") { kind = SurfaceKind::P1xP1; return; }
    if (text == "F1") { kind = SurfaceKind::Fa; a = 1; return; }
    if (text == "F2") { kind = SurfaceKind::Fa; a = 2; return; }
    if (text.rfind("Fa:", 0) == 0) {
        kind = SurfaceKind::Fa;
        a = std::stoi(text.substr(3));
        if (a < 1) throw std::invalid_argument("surface: F_a needs a >= 1");
        return;
    }
    throw std::invalid_argument("surface: expected P2, P1xP1, F1, F2, or Fa:<a>, got " + text);
}

std::string divisor_text(const std::vector<std::int64_t>& coeffs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ',';
        os << coeffs[i];
    }
    return os.str();
}

std::vector<std::int64_t> parse_divisor_text(const std::string& text) {
    std::vector<std::int64_t> coeffs;
    std::istringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        std::size_t used = 0;
        long long v = std::stoll(piece, &used);
        if (used != piece.size())
            throw std::invalid_argument("divisor: bad integer component: " + piece);
        coeffs.push_back(v);
    }
    if (coeffs.empty()) throw std::invalid_argument("divisor: no components in: " + text);
    return coeffs;
}

std::string machine_line(const SurfaceModel& S, const DivisorClass& L1, const DivisorClass& L2,
                         const DivisorClass& beta, std::int64_t n, const Rational& value,
                         const Status& status) {
    std::ostringstream os;
    os << surface_name(S.kind, S.a) << ' ' << divisor_text(L1.pic) << ' ' << divisor_text(L2.pic)
       << ' ' << divisor_text(beta.pic) << ' ' << n << ' ' << value.str() << ' '
       << to_string(status.value);
    return os.str();
}

ParsedMachineLine parse_machine_line(const std::string& line) {
    std::istringstream in(line);
    std::string surface, l1, l2, beta, nstr, value, status;
    if (!(in >> surface >> l1 >> l2 >> beta >> nstr >> value >> status))
        throw std::invalid_argument("machine line: expected 7 fields: " + line);
    std::string extra;
    if (in >> extra) throw std::invalid_argument("machine line: trailing fields: " + line);
    ParsedMachineLine out;
    parse_surface_name(surface, out.kind, out.a);
    out.L1 = parse_divisor_text(l1);
    out.L2 = parse_divisor_text(l2);
    out.beta = parse_divisor_text(beta);
    out.n = std::stoll(nstr);
    out.value = Rational::parse(value);
    out.status = status;
    return out;
}

} // namespace hilbpairs
