#include "cuspvol/volume.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>

#include "cuspvol/errors.hpp"

namespace cuspvol {
namespace {

std::string format_double(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// p/q with q <= max_den when x is (numerically) rational, else nullopt.
std::optional<std::pair<long, long>> as_fraction(double x, long max_den, double tol) {
    for (long q = 1; q <= max_den; ++q) {
        const double p = std::round(x * q);
        if (std::abs(x * q - p) < tol * q) return std::pair<long, long>{static_cast<long>(p), q};
    }
    return std::nullopt;
}

std::string angle_text(double a) {
    if (const auto f = as_fraction(a / kPi, 360, 1e-12)) {
        auto [p, q] = *f;
        if (p == 0) return "0";
        std::string s = p < 0 ? "-" : "";
        p = std::abs(p);
        if (p != 1) s += std::to_string(p);
        s += "pi";
        if (q != 1) s += "/" + std::to_string(q);
        return s;
    }
    return format_double(a, 12);
}

std::string coeff_text(double c) {
    if (const auto f = as_fraction(std::abs(c), 1000, 1e-12)) {
        const auto [p, q] = *f;
        if (q == 1) return std::to_string(p);
        return std::to_string(p) + "/" + std::to_string(q);
    }
    return format_double(std::abs(c), 12);
}

double angle_of(const EdgeLabel& l) {
    switch (l.kind) {
        case LabelKind::Finite: return kPi / l.weight;
        case LabelKind::Infinity: return 0.0;
        case LabelKind::Dotted: break;
    }
    throw UnsupportedError("dotted edges have no dihedral angle");
}

double dihedral(const CoxeterGraph& g, int i, int j) {
    const auto l = g.label(i, j);
    return l ? angle_of(*l) : kPi / 2.0;
}

}  // namespace

LobSum& LobSum::operator+=(const LobSum& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

LobSum LobSum::scaled(double factor) const {
    LobSum out;
    for (const auto& t : terms_) out.add(t.coeff * factor, t.angle);
    return out;
}

double LobSum::evaluate() const {
    double v = 0.0;
    for (const auto& t : terms_) v += t.coeff * L(t.angle);
    return v;
}

LobSum LobSum::simplified() const {
    std::vector<LobTerm> folded;
    for (const auto& t : terms_) {
        double a = std::remainder(t.angle, kPi);
        double c = t.coeff;
        if (a < 0.0) {
            a = -a;
            c = -c;
        }
        if (a < 1e-14 || std::abs(a - kPi / 2.0) < 1e-14) continue;
        const auto same = std::find_if(folded.begin(), folded.end(), [&](const LobTerm& f) { return std::abs(f.angle - a) < 1e-12; });
        if (same != folded.end())
            same->coeff += c;
        else
            folded.push_back({c, a});
    }
    std::erase_if(folded, [](const LobTerm& t) { return std::abs(t.coeff) < 1e-14; });
    std::sort(folded.begin(), folded.end(), [](const LobTerm& x, const LobTerm& y) { return x.angle < y.angle; });
    LobSum out;
    for (const auto& t : folded) out.add(t.coeff, t.angle);
    return out;
}

std::string LobSum::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        const bool negative = t.coeff < 0.0;
        const std::string c = coeff_text(t.coeff);
        std::string term = (c == "1" ? "" : c + " ") + "L(" + angle_text(t.angle) + ")";
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

double mu3() { return 3.0 * L(kPi / 3.0); }
double omega3() { return 8.0 * L(kPi / 4.0); }
double v_star() { return vol_orthoscheme({kPi / 5.0, kPi / 3.0, false}); }
double d3_infinity() { return std::sqrt(3.0) / (2.0 * mu3()); }

bool is_truncated_regime(double alpha, double beta) { return alpha + beta < kPi / 2.0 - kRegimeTol; }

LobSum orthoscheme_terms(double alpha, double beta) {
    return {{0.25, kPi / 2.0 + alpha - beta}, {-0.25, kPi / 2.0 + alpha + beta}, {0.5, beta}};
}

double vol_orthoscheme(const Orthoscheme& r) {
    const auto in_range = [](double x) { return std::isfinite(x) && x > 0.0 && x < kPi / 2.0; };
    if (!in_range(r.alpha) || !in_range(r.beta)) throw DomainError("orthoscheme angles must lie in (0, pi/2)");
    if (r.truncated != is_truncated_regime(r.alpha, r.beta))
        throw DomainError(r.truncated ? "truncated orthoscheme needs alpha + beta < pi/2"
                                      : "orthoscheme with alpha + beta < pi/2 must be marked truncated");
    const double v = orthoscheme_terms(r.alpha, r.beta).evaluate();
    if (!(v > 0.0)) throw DomainError("orthoscheme volume is not positive");
    return v;
}

double vol_ideal_tetrahedron(const IdealTetrahedron& t) {
    for (const double a : {t.alpha, t.beta, t.gamma})
        if (!std::isfinite(a) || !(a > 0.0)) throw ValidationError("ideal tetrahedron angles must be positive");
    if (std::abs(t.alpha + t.beta + t.gamma - kPi) > 1e-12) throw ValidationError("ideal tetrahedron angles must sum to pi");
    return L(t.alpha) + L(t.beta) + L(t.gamma);
}

LobSum ideal_vertex_decomposition(const CoxeterGraph& g) {
    const auto kinds = classify_vertices(gram_matrix(g));
    const auto ideal = std::find(kinds.begin(), kinds.end(), VertexKind::Ideal);
    if (ideal == kinds.end()) throw UnsupportedError("tetrahedron has no ideal vertex");
    const int apex = static_cast<int>(ideal - kinds.begin());
    std::vector<int> side;
    for (int k = 0; k < 4; ++k)
        if (k != apex) side.push_back(k);
    const int a = side[0], b = side[1], c = side[2];
    for (const auto& [i, j] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
        const auto l = g.label(i, j);
        if (l && l->kind != LabelKind::Finite) throw UnsupportedError("ideal vertex with parallel vertical facets");
    }

    // Euclidean triangle cut out by the three vertical facets, by the law of sines.
    const double A = dihedral(g, b, c), B = dihedral(g, a, c), C = dihedral(g, a, b);
    const Eigen::Vector2d Vb(0.0, 0.0), Vc(std::sin(A), 0.0), Va(std::sin(C) * std::cos(B), std::sin(C) * std::sin(B));
    const std::map<int, std::pair<Eigen::Vector2d, Eigen::Vector2d>> sides{{a, {Vb, Vc}}, {b, {Vc, Va}}, {c, {Va, Vb}}};

    // Hemisphere facet: signed distance of its centre to side l equals R cos(angle(apex, l)).
    Eigen::Matrix3d m;
    Eigen::Vector3d rhs;
    int row = 0;
    for (const int l : side) {
        const auto& [P, Q] = sides.at(l);
        const Eigen::Vector2d u = (Q - P).normalized();
        const Eigen::Vector2d normal(-u.y(), u.x());
        m(row, 0) = normal.x();
        m(row, 1) = normal.y();
        m(row, 2) = -std::cos(dihedral(g, apex, l));
        rhs(row) = normal.dot(P);
        ++row;
    }
    const Eigen::Vector3d sol = m.fullPivLu().solve(rhs);
    const Eigen::Vector2d centre(sol(0), sol(1));
    const double R = sol(2);
    if (!(R > 0.0)) throw InvalidRegime("degenerate hemisphere in cone decomposition");

    LobSum total;
    for (const int l : side) {
        const auto& [P, Q] = sides.at(l);
        const double len = (Q - P).norm();
        const Eigen::Vector2d u = (Q - P) / len;
        const Eigen::Vector2d normal(-u.y(), u.x());
        const double h = normal.dot(centre - P);
        if (std::abs(h) < 1e-13) continue;
        const double foot = (centre - P).dot(u);
        for (const auto& [t_end, end_sign] : {std::pair{len, 1.0}, std::pair{0.0, -1.0}}) {
            const double seg = t_end - foot;
            const double phi = std::atan2(std::abs(seg), std::abs(h));
            const double alpha = std::acos(std::clamp(std::abs(h) / R, -1.0, 1.0));
            const double sign = (h > 0 ? 1.0 : -1.0) * (seg > 0 ? 1.0 : -1.0) * end_sign;
            total += orthoscheme_terms(alpha, kPi / 2.0 - phi).scaled(sign);
        }
    }
    return total;
}

double vol_coxeter_tetrahedron(const CoxeterGraph& g) { return ideal_vertex_decomposition(g).evaluate(); }

double family_volume_pi3(double k) {
    if (!(k >= 2.0)) throw DomainError("family index must be >= 2");
    return 0.5 * L(kPi / 3.0) + 0.25 * (L(kPi / 6.0 + kPi / k) + L(kPi / 6.0 - kPi / k));
}

double family_volume_pi6(double k) {
    if (!(k >= 2.0)) throw DomainError("family index must be >= 2");
    return 0.5 * L(kPi / 6.0) + 0.25 * (L(kPi / 3.0 + kPi / k) + L(kPi / 3.0 - kPi / k));
}

bool schlafli_monotonicity_check(double beta, std::span<const double> alpha_grid, bool strict_regime) {
    if (alpha_grid.empty()) return true;
    if (!std::is_sorted(alpha_grid.begin(), alpha_grid.end())) throw DomainError("alpha grid must be sorted increasing");
    const bool first_regime = is_truncated_regime(alpha_grid.front(), beta);
    if (strict_regime && std::any_of(alpha_grid.begin(), alpha_grid.end(),
                                     [&](double a) { return is_truncated_regime(a, beta) != first_regime; }))
        throw DomainError("alpha grid mixes truncated and non-truncated orthoschemes");
    double previous = 0.0;
    for (std::size_t k = 0; k < alpha_grid.size(); ++k) {
        const double a = alpha_grid[k];
        const double v = vol_orthoscheme({a, beta, is_truncated_regime(a, beta)});
        if (k > 0 && !(v < previous)) return false;
        previous = v;
    }
    return true;
}

}  // namespace cuspvol
