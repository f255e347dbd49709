#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cuspvol/coxeter.hpp"
#include "cuspvol/lobachevsky.hpp"

namespace cuspvol {

// sum_i coeff_i * L(angle_i)
struct LobTerm {
    double coeff = 0.0;
    double angle = 0.0;
};

class LobSum {
public:
    LobSum() = default;
    LobSum(std::initializer_list<LobTerm> terms) : terms_(terms) {}

    const std::vector<LobTerm>& terms() const { return terms_; }
    void add(double coeff, double angle) { terms_.push_back({coeff, angle}); }
    LobSum& operator+=(const LobSum& other);
    LobSum scaled(double factor) const;

    double evaluate() const;
    // Folds angles into (-pi/2, pi/2] by oddness and periodicity, merges equal angles, drops zeros.
    LobSum simplified() const;
    std::string text() const;

private:
    std::vector<LobTerm> terms_;
};

// Ideal regular tetrahedron, ideal regular octahedron, vol H^3/[5,3,6].
double mu3();
double omega3();
double v_star();
// Simplicial horoball density sqrt(3)/(2 mu3).
double d3_infinity();

struct Orthoscheme {
    double alpha = 0.0;
    double beta = 0.0;
    bool truncated = false;
};

inline constexpr double kRegimeTol = 1e-12;

bool is_truncated_regime(double alpha, double beta);
LobSum orthoscheme_terms(double alpha, double beta);
double vol_orthoscheme(const Orthoscheme& r);

struct IdealTetrahedron {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

double vol_ideal_tetrahedron(const IdealTetrahedron& t);

// Volume of a Coxeter tetrahedron with at least one ideal vertex, by coning
// from that vertex at infinity onto the opposite hemisphere.
LobSum ideal_vertex_decomposition(const CoxeterGraph& tetrahedron);
double vol_coxeter_tetrahedron(const CoxeterGraph& tetrahedron);

// Closed forms of vol R(pi/k, pi/3) and vol R(pi/k, pi/6).
double family_volume_pi3(double k);
double family_volume_pi6(double k);

// Strictly decreasing volume along the increasing alpha grid. With strict_regime,
// a grid straddling alpha + beta = pi/2 is rejected.
bool schlafli_monotonicity_check(double beta, std::span<const double> alpha_grid, bool strict_regime = false);

struct CatalogEntry {
    std::string symbol;
    std::string closed_form;
    LobSum expression;
    double value = 0.0;
    double decimal = 0.0;
    int decimal_places = 6;
    std::optional<int> cusps;
    std::optional<Arithmeticity> arithmetic;
    std::string kind;  // "tetrahedron", "polyhedron", "derived", "constant"
    std::string parent;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& vol_named(std::string_view symbol);
// The 23 non-compact Coxeter tetrahedra.
std::vector<std::string> noncompact_tetrahedra();

nlohmann::json catalog_entry_json(const CatalogEntry& e);
nlohmann::json catalog_json();

}  // namespace cuspvol
