#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace cuspvol {

// Horoball in the upper half space. A ball at infinity is described by its height.
struct Horoball {
    std::optional<Eigen::Vector2d> center;
    double diameter = 1.0;
    double height = 1.0;

    static Horoball at_infinity(double height = 1.0) { return {std::nullopt, 0.0, height}; }
    static Horoball finite(Eigen::Vector2d c, double diameter) { return {c, diameter, 0.0}; }
    bool is_full_sized(double tol = 1e-12) const;
};

enum class CuspType { T236, T244, T333 };
enum class Placement { A2, A3, A4, A6, None };

std::string to_string(CuspType t);
std::string to_string(Placement p);

struct CuspDiagram {
    CuspType cusp_type = CuspType::T236;
    double tau = 1.0;
    double d = 1.0;  // e when several classes are present
    Placement placement = Placement::A6;
    std::optional<Placement> partner;  // second class
    int classes = 1;
    bool mirror = false;
};

// tau implied by d for a placement (or a pair of placements of distinct classes).
double tau_for(CuspType type, Placement placement, std::optional<Placement> partner, int classes, double d);
CuspDiagram make_diagram(CuspType type, Placement placement, double d, bool mirror,
                         std::optional<Placement> partner = std::nullopt, int classes = 1);

struct CuspVolume {
    double value = 0.0;
    std::string formula;
};

CuspVolume cusp_volume(const CuspDiagram& diag);

// vol(C) / d3(infinity)
double min_orbifold_volume_bound(double cusp_vol);

double tangent_center_distance(double r1, double r2);
double image_diameter(double h, double k, double r);

struct TransferReport {
    std::vector<std::pair<std::string, double>> ratios;
    double induced_distance = 0.0;
    double max_deviation = 0.0;
    bool tangent = false;
};

TransferReport horoball_transfer(double delta0, double h, double k, double tol = 1e-9);

struct UVW {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
};

// theta_max defaults to pi/6 for {2,3,6} and pi/4 for {2,4,4}.
UVW uvw(double d, double theta, CuspType type, std::optional<double> theta_max = std::nullopt);

enum class EndCase { A, B };
std::string to_string(EndCase c);

// d_1 .. d_kmax with d_1 = d and d_{k+1} = d - 1/d_k.
std::vector<double> recursion_ds(double d, int kmax);
// A: 1/d_kmax - d/2.  B: d - 1/d_kmax - 1.  1/d_0 is taken as 0.
double end_condition_residual(double d, int kmax, EndCase c);
double d_from_end_condition(int kmax, EndCase c);
double d_from_end_condition_bisection(int kmax, EndCase c);

double bisector_height(double d, double a);
double beta_from_d(double d);

// Minimal distance of inequivalent full-sized balls for an isosceles angle alpha.
double e_from_alpha(double alpha);

}  // namespace cuspvol
