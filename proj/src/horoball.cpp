#include "cuspvol/horoball.hpp"

#include <algorithm>
#include <cmath>

#include "cuspvol/errors.hpp"
#include "cuspvol/lobachevsky.hpp"
#include "cuspvol/roots.hpp"
#include "cuspvol/volume.hpp"

namespace cuspvol {
namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

void require_positive(double x, const char* what) {
    if (!std::isfinite(x) || !(x > 0.0)) throw DomainError(std::string(what) + " must be positive");
}

bool same_pair(Placement a, Placement b, Placement x, Placement y) { return (a == x && b == y) || (a == y && b == x); }

std::string placement_key(const CuspDiagram& g) {
    std::string key = to_string(g.placement);
    if (g.partner) key += "+" + to_string(*g.partner);
    return key;
}

}  // namespace

bool Horoball::is_full_sized(double tol) const { return center.has_value() && std::abs(diameter - 1.0) <= tol; }

std::string to_string(CuspType t) {
    switch (t) {
        case CuspType::T236: return "2,3,6";
        case CuspType::T244: return "2,4,4";
        case CuspType::T333: return "3,3,3";
    }
    return "?";
}

std::string to_string(Placement p) {
    switch (p) {
        case Placement::A2: return "a2";
        case Placement::A3: return "a3";
        case Placement::A4: return "a4";
        case Placement::A6: return "a6";
        case Placement::None: return "none";
    }
    return "?";
}

std::string to_string(EndCase c) { return c == EndCase::A ? "A" : "B"; }

double tau_for(CuspType type, Placement p, std::optional<Placement> partner, int classes, double d) {
    require_positive(d, "distance");
    if (classes < 1) throw ValidationError("class count must be >= 1");
    if (classes == 1 && partner) throw ValidationError("a single class has no partner placement");
    if (classes > 1 && !partner) throw ValidationError("several classes need a partner placement");
    if (type == CuspType::T333) throw UnsupportedError("no placement formula for cusps of type {3,3,3}");
    if (!partner) {
        if (type == CuspType::T236) {
            if (p == Placement::A6) return d;
            if (p == Placement::A3) return kSqrt3 * d;
            if (p == Placement::A2) return 2.0 * d;
        } else {
            if (p == Placement::A4) return d;
            if (p == Placement::A2) return kSqrt2 * d;
        }
        throw ValidationError("placement " + to_string(p) + " is not a singular point of a {" + to_string(type) + "} cusp");
    }
    const Placement q = *partner;
    if (type == CuspType::T236) {
        if (classes == 2 && same_pair(p, q, Placement::A6, Placement::A3)) return kSqrt3 * d;
        if (classes == 2 && same_pair(p, q, Placement::A6, Placement::A2)) return 2.0 * d;
        if (same_pair(p, q, Placement::A2, Placement::A3)) return 2.0 * kSqrt3 * d;
    } else {
        if (classes == 2 && p == Placement::A4 && q == Placement::A4) return kSqrt2 * d;
        if (same_pair(p, q, Placement::A4, Placement::A2)) return 2.0 * d;
    }
    throw ValidationError("unregistered placement pair " + to_string(p) + "+" + to_string(q));
}

CuspDiagram make_diagram(CuspType type, Placement placement, double d, bool mirror, std::optional<Placement> partner,
                         int classes) {
    CuspDiagram g{type, 0.0, d, placement, partner, classes, mirror};
    g.tau = placement == Placement::None ? d : tau_for(type, placement, partner, classes, d);
    return g;
}

CuspVolume cusp_volume(const CuspDiagram& g) {
    if (!std::isfinite(g.d) || g.d < 1.0 - 1e-12) throw ValidationError("full-sized balls overlap: d < 1");
    if (g.cusp_type == CuspType::T333) throw UnsupportedError("no cusp volume formula for type {3,3,3}");
    const std::string type = "{" + to_string(g.cusp_type) + "}";
    if (g.placement == Placement::None) {
        if (g.partner || g.classes != 1) throw ValidationError("non-singular placement is registered for one class only");
        const double v = g.cusp_type == CuspType::T236 ? (kSqrt3 / 12.0) * (1.0 + kSqrt3 / 2.0) : 0.25;
        return {v, type + "/non-singular"};
    }
    const double expected = tau_for(g.cusp_type, g.placement, g.partner, g.classes, g.d);
    if (std::abs(g.tau - expected) > 1e-9 * std::max(1.0, expected))
        throw ValidationError("tau is incompatible with d for placement " + placement_key(g));
    const double area = g.cusp_type == CuspType::T236 ? kSqrt3 * g.tau * g.tau / 24.0 : g.tau * g.tau / 8.0;
    const double v = g.mirror ? 0.5 * area : area;
    std::string formula = type + "/" + placement_key(g) + (g.mirror ? "/mirror" : "/no-mirror");
    if (g.classes > 1) formula += "/classes=" + std::to_string(g.classes);
    return {v, formula};
}

double min_orbifold_volume_bound(double cusp_vol) {
    require_positive(cusp_vol, "cusp volume");
    return cusp_vol / d3_infinity();
}

double tangent_center_distance(double r1, double r2) {
    require_positive(r1, "radius");
    require_positive(r2, "radius");
    return 2.0 * std::sqrt(r1 * r2);
}

double image_diameter(double h, double k, double r) {
    require_positive(h, "diameter");
    require_positive(k, "diameter");
    require_positive(r, "distance");
    return h * k / (r * r);
}

TransferReport horoball_transfer(double delta0, double h, double k, double tol) {
    require_positive(delta0, "delta0");
    require_positive(h, "h");
    require_positive(k, "k");
    const double delta = delta0 / h;
    TransferReport r;
    r.ratios = {{"sqrt(h)/sqrt(k)", std::sqrt(h) / std::sqrt(k)},
                {"delta0/k", delta0 / k},
                {"h/delta0", h / delta0},
                {"h*delta/k", h * delta / k},
                {"1/delta", 1.0 / delta}};
    const double first = r.ratios.front().second;
    for (const auto& [name, value] : r.ratios) r.max_deviation = std::max(r.max_deviation, std::abs(value - first));
    r.induced_distance = 1.0 / delta0;
    r.tangent = r.max_deviation <= tol * std::max(1.0, std::abs(first));
    return r;
}

UVW uvw(double d, double theta, CuspType type, std::optional<double> theta_max) {
    if (!std::isfinite(d) || !(d > 1.0)) throw DomainError("uvw needs d > 1");
    const double upper = theta_max.value_or(type == CuspType::T244 ? kPi / 4.0 : kPi / 6.0);
    if (!std::isfinite(theta) || theta < -1e-12 || theta > upper + 1e-12) throw DomainError("theta outside its admissible interval");
    const double d2 = d * d;
    const auto root = [](double sq) {
        if (sq < -1e-12) throw DomainError("negative squared distance");
        return std::sqrt(std::max(sq, 0.0));
    };
    return {root(d2 + 3.0 / d2 - 2.0 * kSqrt3 * std::cos(kPi / 6.0 - theta)),
            root(d2 + 4.0 / d2 - 4.0 * std::cos(theta)),
            root(d2 + 1.0 / d2 - 2.0 * std::cos(theta))};
}

std::vector<double> recursion_ds(double d, int kmax) {
    if (!std::isfinite(d) || d < 0.0) throw DomainError("recursion needs a finite d >= 0");
    if (kmax < 0) throw DomainError("kmax must be >= 0");
    std::vector<double> ds;
    ds.reserve(kmax);
    double dk = d;
    for (int k = 1; k <= kmax; ++k) {
        if (!(dk > 0.0)) throw InvalidRegime("recursion left the regime d_k > 0 at k = " + std::to_string(k));
        ds.push_back(dk);
        dk = d - 1.0 / dk;
    }
    return ds;
}

double end_condition_residual(double d, int kmax, EndCase c) {
    const auto ds = recursion_ds(d, kmax);
    const double x = ds.empty() ? 0.0 : 1.0 / ds.back();
    return c == EndCase::A ? x - d / 2.0 : d - x - 1.0;
}

double d_from_end_condition(int kmax, EndCase c) {
    if (kmax < 0) throw DomainError("kmax must be >= 0");
    const int l = c == EndCase::A ? 2 * kmax + 2 : 2 * kmax + 3;
    return std::max(0.0, 2.0 * std::cos(kPi / l));
}

double d_from_end_condition_bisection(int kmax, EndCase c) {
    if (kmax < 0) throw DomainError("kmax must be >= 0");
    const double lo = kmax == 0 ? 0.0 : std::max(0.0, 2.0 * std::cos(kPi / (kmax + 1))) + 1e-7;
    return bisect([&](double d) { return end_condition_residual(d, kmax, c); }, lo, 2.0, 1e-13);
}

double bisector_height(double d, double a) {
    if (!std::isfinite(d) || !std::isfinite(a)) throw DomainError("bisector height needs finite input");
    if (d < 2.0) throw InvalidRegime("bisector height needs d >= 2");
    // 2r - a^2 with r = (d^2/4 + a^2 - 1)/2
    const double sq = d * d / 4.0 - 1.0;
    if (sq < -1e-12) throw InvalidRegime("bisector below the boundary plane");
    return std::sqrt(std::max(sq, 0.0));
}

double beta_from_d(double d) {
    if (!std::isfinite(d) || d <= kSqrt3) throw DomainError("beta needs d > sqrt(3)");
    if (d <= 2.0) throw InvalidRegime("beta is defined in the regime d > 2");
    return std::acos(std::min(1.0, d / (2.0 * std::sqrt(d * d - 3.0))));
}

double e_from_alpha(double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= kPi / 2.0) throw DomainError("alpha must lie in [0, pi/2)");
    return std::sqrt(2.0 * std::cos(alpha));
}

}  // namespace cuspvol
