#include "cuspvol/render.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "cuspvol/caser.hpp"
#include "cuspvol/errors.hpp"
#include "cuspvol/lobachevsky.hpp"

namespace cuspvol {
namespace {

using Point = std::pair<double, double>;

struct Layout {
    CuspType type = CuspType::T236;
    Placement placement = Placement::A6;
    std::optional<Placement> partner;
    int classes = 1;
    double d = 1.0;
    double tau = 1.0;
    int depth = 0;
    std::function<double(double)> centre_w;
    std::string title;
};

std::vector<Point> cell_vertices(CuspType type, double tau) {
    if (type == CuspType::T236) {
        const double r = tau / std::sqrt(3.0);
        return {{0.0, r}, {r * std::cos(7.0 * kPi / 6.0), r * std::sin(7.0 * kPi / 6.0)},
                {r * std::cos(-kPi / 6.0), r * std::sin(-kPi / 6.0)}};
    }
    const double h = tau / 2.0;
    return {{-h, h}, {-h, -h}, {h, -h}, {h, h}};
}

std::vector<Point> midpoints(const std::vector<Point>& poly) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& [ax, ay] = poly[i];
        const auto& [bx, by] = poly[(i + 1) % poly.size()];
        out.emplace_back((ax + bx) / 2.0, (ay + by) / 2.0);
    }
    return out;
}

std::vector<Point> placement_points(CuspType type, Placement p, const std::vector<Point>& cell, bool partner) {
    switch (p) {
        case Placement::A6: return cell;
        case Placement::A3: return {{0.0, 0.0}};
        case Placement::A2: return midpoints(cell);
        case Placement::A4:
            if (type == CuspType::T244 && partner) return {{0.0, 0.0}};
            return cell;
        case Placement::None: break;
    }
    throw UnsupportedError("a diagram needs a singular placement");
}

void add_chains(std::vector<Disk>& disks, const std::vector<Point>& centres, double d, int depth) {
    if (depth == 0 || centres.size() < 2) return;
    std::vector<double> ds;
    double dk = d;
    for (int k = 1; k <= depth && dk > 0.0; ++k) {
        ds.push_back(dk);
        dk = d - 1.0 / dk;
    }
    for (std::size_t level = 0; level < ds.size(); ++level) {
        double product = 1.0;
        for (std::size_t i = 0; i <= level; ++i) product *= ds[i];
        const double radius = 0.5 / (product * product);
        const double offset = 1.0 / ds[level];
        const std::string role = "level-" + std::to_string(level + 1);
        for (const auto& [px, py] : centres) {
            for (const auto& [qx, qy] : centres) {
                const double len = std::hypot(qx - px, qy - py);
                if (len == 0.0 || std::abs(len - d) > 1e-9 * std::max(1.0, d)) continue;
                disks.push_back({px + offset * (qx - px) / len, py + offset * (qy - py) / len, radius, role});
            }
        }
    }
}

Layout layout_for(const RenderSpec& spec) {
    Layout l;
    if (spec.scenario) {
        const Scenario& s = find_scenario(*spec.scenario);
        if (s.cusp_type != "2,3,6" && s.cusp_type != "2,4,4")
            throw UnsupportedError("row " + s.id + " has no rigid single-cusp diagram");
        if (!s.placement || *s.placement == Placement::None)
            throw UnsupportedError("row " + s.id + " has no singular placement to draw");
        const ScenarioSolution sol = solve_scenario(s);
        if (!sol.d) throw UnsupportedError("row " + s.id + " has no solved distance");
        l.type = s.cusp_type == "2,3,6" ? CuspType::T236 : CuspType::T244;
        l.placement = *s.placement;
        l.partner = s.partner;
        l.classes = s.classes;
        l.d = *sol.d;
        l.centre_w = s.centre_w;
        l.title = "row " + s.id + " " + s.name;
    } else {
        l.type = spec.cusp_type;
        l.placement = spec.placement;
        l.d = spec.d;
        l.title = "{" + to_string(l.type) + "} " + to_string(l.placement);
    }
    if (l.type == CuspType::T333) throw UnsupportedError("no diagram for cusps of type {3,3,3}");
    if (!std::isfinite(l.d) || l.d < 1.0 - 1e-12) throw ValidationError("render needs d >= 1");
    l.tau = tau_for(l.type, l.placement, l.partner, l.classes, l.d);
    l.depth = l.classes > 1 ? 0 : spec.depth;
    char buf[64];
    std::snprintf(buf, sizeof buf, " d=%.6f depth=%d", l.d, l.depth);
    l.title += buf;
    return l;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s = buf;
    return s == "-0.000000" ? "0.000000" : s;
}

}  // namespace

Scene build_scene(const RenderSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0) throw ValidationError("canvas size must be positive");
    if (!std::isfinite(spec.scale) || !(spec.scale > 0.0)) throw ValidationError("scale must be positive");
    if (spec.depth < 0 || spec.depth > kMaxRenderDepth)
        throw ValidationError("depth must lie in [0, " + std::to_string(kMaxRenderDepth) + "]");
    const Layout l = layout_for(spec);
    Scene scene;
    scene.title = l.title;
    scene.cell = cell_vertices(l.type, l.tau);
    const auto full = placement_points(l.type, l.placement, scene.cell, false);
    std::vector<Point> all = full;
    if (l.partner) {
        const auto second = placement_points(l.type, *l.partner, scene.cell, true);
        all.insert(all.end(), second.begin(), second.end());
    }
    for (const auto& [x, y] : all) scene.disks.push_back({x, y, 0.5, "full"});
    add_chains(scene.disks, full, l.d, l.depth);
    if (l.centre_w) {
        const double w = l.centre_w(l.d);
        scene.disks.push_back({0.0, 0.0, 0.5 / (w * w * l.d * l.d), "centre"});
    }
    for (const auto& [x, y] : all) scene.disks.push_back({x, y, 1.0, "no-tangency"});
    return scene;
}

std::string render_svg(const RenderSpec& spec) {
    const Scene scene = build_scene(spec);
    const double cx = spec.width / 2.0;
    const double cy = spec.height / 2.0;
    const auto px = [&](double x) { return fmt(cx + spec.scale * x); };
    const auto py = [&](double y) { return fmt(cy - spec.scale * y); };
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) + "\" height=\"" +
           std::to_string(spec.height) + "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
           std::to_string(spec.height) + "\">\n";
    out += "<title>" + scene.title + "</title>\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) +
           "\" fill=\"white\"/>\n";
    out += "<polygon class=\"cell\" points=\"";
    for (std::size_t i = 0; i < scene.cell.size(); ++i) {
        if (i) out += ' ';
        out += px(scene.cell[i].first) + "," + py(scene.cell[i].second);
    }
    out += "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    for (const Disk& disk : scene.disks) {
        out += "<circle class=\"" + disk.role + "\" cx=\"" + px(disk.x) + "\" cy=\"" + py(disk.y) + "\" r=\"" +
               fmt(spec.scale * disk.r) + "\"";
        if (disk.role == "no-tangency")
            out += " fill=\"none\" stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n";
        else if (disk.role == "full")
            out += " fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"black\"/>\n";
        else if (disk.role == "centre")
            out += " fill=\"#fdae6b\" fill-opacity=\"0.7\" stroke=\"black\"/>\n";
        else
            out += " fill=\"#a1d99b\" fill-opacity=\"0.7\" stroke=\"black\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace cuspvol
