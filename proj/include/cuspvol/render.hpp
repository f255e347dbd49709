#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuspvol/horoball.hpp"

namespace cuspvol {

inline constexpr int kMaxRenderDepth = 6;

struct RenderSpec {
    std::optional<std::string> scenario;
    CuspType cusp_type = CuspType::T236;
    double d = 1.0;
    Placement placement = Placement::A6;
    int depth = 1;
    int width = 800;
    int height = 800;
    double scale = 160.0;
};

struct Disk {
    double x = 0.0;
    double y = 0.0;
    double r = 0.0;
    std::string role;  // "full", "level-k", "centre", "no-tangency"
};

struct Scene {
    std::string title;
    std::vector<std::pair<double, double>> cell;
    std::vector<Disk> disks;
};

// Shadows on the horosphere in Euclidean units, cell centred at the origin.
Scene build_scene(const RenderSpec& spec);
std::string render_svg(const RenderSpec& spec);

}  // namespace cuspvol
