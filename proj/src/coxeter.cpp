#include <algorithm>
#include <cmath>
#include <limits>

#include "cuspvol/coxeter.hpp"
#include "cuspvol/errors.hpp"
#include "cuspvol/lobachevsky.hpp"

namespace cuspvol {
namespace {

Eigen::MatrixXd principal(const Eigen::MatrixXd& m, const std::vector<int>& keep) {
    const auto k = static_cast<Eigen::Index>(keep.size());
    Eigen::MatrixXd s(k, k);
    for (Eigen::Index a = 0; a < k; ++a)
        for (Eigen::Index b = 0; b < k; ++b) s(a, b) = m(keep[a], keep[b]);
    return s;
}

int component_count(const Eigen::MatrixXd& g, const std::vector<int>& nodes) {
    const int k = static_cast<int>(nodes.size());
    std::vector<int> parent(k);
    for (int a = 0; a < k; ++a) parent[a] = a;
    const auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    int components = k;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g(nodes[a], nodes[b]) != 0.0) {
                const int ra = find(a);
                const int rb = find(b);
                if (ra != rb) {
                    parent[ra] = rb;
                    --components;
                }
            }
    return components;
}

}  // namespace

bool GramMatrix::exact_complete() const {
    for (const auto& row : exact2g)
        for (const auto& e : row)
            if (!e) return false;
    return true;
}

GramMatrix gram_matrix(const CoxeterGraph& graph, const DottedParams& dotted) {
    const int n = graph.node_count();
    GramMatrix g;
    g.n = n;
    g.entries = Eigen::MatrixXd::Identity(n, n);
    g.exact2g.assign(n, std::vector<std::optional<AlgebraicNumber>>(n));
    for (int i = 0; i < n; ++i) {
        g.exact2g[i][i] = AlgebraicNumber(2);
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto label = graph.label(i, j);
            if (!label) {
                g.entries(i, j) = 0.0;
                g.exact2g[i][j] = AlgebraicNumber(0);
                continue;
            }
            switch (label->kind) {
                case LabelKind::Finite:
                    g.entries(i, j) = -std::cos(kPi / label->weight);
                    g.exact2g[i][j] = AlgebraicNumber::minus_two_cos_pi_over(label->weight);
                    break;
                case LabelKind::Infinity:
                    g.entries(i, j) = -1.0;
                    g.exact2g[i][j] = AlgebraicNumber::minus_two_cos_pi_over(0);
                    break;
                case LabelKind::Dotted: {
                    std::optional<double> l = label->length;
                    if (const auto it = dotted.find({std::min(i, j), std::max(i, j)}); it != dotted.end()) l = it->second;
                    if (!l || !(*l > 0.0)) throw ValidationError("dotted edge without a positive length parameter");
                    g.entries(i, j) = -std::cosh(*l);
                    break;
                }
            }
        }
    }
    return g;
}

Inertia inertia(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) throw ValidationError("inertia needs a square matrix");
    if (m.rows() == 0) return {};
    const double scale = m.cwiseAbs().maxCoeff();
    const double threshold = kZeroEigenThreshold * (scale > 0.0 ? scale : 1.0);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    Inertia in;
    for (const double ev : solver.eigenvalues()) {
        if (ev > threshold)
            ++in.positive;
        else if (ev < -threshold)
            ++in.negative;
        else
            ++in.zero;
    }
    return in;
}

std::string to_string(VertexKind kind) {
    switch (kind) {
        case VertexKind::Finite: return "FINITE";
        case VertexKind::Ideal: return "IDEAL";
        case VertexKind::Ultraideal: return "ULTRAIDEAL";
    }
    return "?";
}

std::vector<VertexKind> classify_vertices(const GramMatrix& g) {
    if (g.n != 4) throw ValidationError("vertex classification expects a simplex in H^3 (4 facets)");
    if (inertia(g) != Inertia{3, 0, 1}) throw ValidationError("Gram matrix is not of signature (3,1)");
    std::vector<VertexKind> kinds;
    for (int i = 0; i < 4; ++i) {
        std::vector<int> keep;
        for (int k = 0; k < 4; ++k)
            if (k != i) keep.push_back(k);
        const Inertia in = inertia(principal(g.entries, keep));
        if (in == Inertia{3, 0, 0})
            kinds.push_back(VertexKind::Finite);
        else if (in == Inertia{2, 1, 0})
            kinds.push_back(VertexKind::Ideal);
        else if (in.negative > 0)
            kinds.push_back(VertexKind::Ultraideal);
        else
            throw ValidationError("degenerate vertex submatrix");
    }
    return kinds;
}

int ideal_vertex_count(const GramMatrix& g) {
    const Inertia whole = inertia(g);
    if (whole.negative != 1) throw ValidationError("Gram matrix is not hyperbolic");
    const int target_rank = whole.positive - 1;
    const int n = g.n;
    if (n > 20) throw UnsupportedError("too many facets for subset enumeration");
    int count = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> nodes;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k)) nodes.push_back(k);
        const Inertia in = inertia(principal(g.entries, nodes));
        if (in.negative != 0 || in.positive != target_rank) continue;
        if (in.zero == component_count(g.entries, nodes)) ++count;
    }
    return count;
}

std::vector<Cycle> cycle_products(const GramMatrix& g) {
    if (!g.exact_complete()) throw ValidationError("exact 2G entries are not fully populated");
    const int n = g.n;
    std::vector<Cycle> cycles;
    std::vector<int> path;
    std::vector<bool> on_path(n, false);
    const auto nonzero = [&](int a, int b) { return !g.exact2g[a][b]->is_zero(); };

    const auto close = [&](const std::vector<int>& nodes) {
        Cycle c;
        c.nodes = nodes;
        AlgebraicNumber p2(1);
        const int k = static_cast<int>(nodes.size());
        for (int e = 0; e < k; ++e) p2 = p2 * *g.exact2g[nodes[e]][nodes[(e + 1) % k]];
        c.product_2g = p2;
        c.product_g = p2 * AlgebraicNumber(AlgebraicNumber::Rational(1, std::int64_t{1} << k));
        cycles.push_back(c);
    };

    const auto extend = [&](auto&& self, int start, int cur) -> void {
        for (int nxt = start + 1; nxt < n; ++nxt) {
            if (on_path[nxt] || !nonzero(cur, nxt)) continue;
            path.push_back(nxt);
            on_path[nxt] = true;
            if (path.size() >= 3 && nonzero(nxt, start) && path[1] < path.back()) close(path);
            self(self, start, nxt);
            on_path[nxt] = false;
            path.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path.assign(n, false);
        on_path[s] = true;
        extend(extend, s, s);
    }
    return cycles;
}

std::string to_string(Arithmeticity a) { return a == Arithmeticity::Arithmetic ? "ARITHMETIC" : "NON_ARITHMETIC"; }

ArithmeticityReport arithmeticity(const CoxeterGraph& graph) {
    if (graph.has_dotted()) throw UnsupportedError("arithmeticity criterion is not applied to graphs with dotted edges");
    ArithmeticityReport report;
    for (const auto& e : graph.edges()) {
        if (e.label.kind != LabelKind::Finite) continue;
        const int m = e.label.weight;
        if (m != 3 && m != 4 && m != 6) {
            report.verdict = Arithmeticity::NonArithmetic;
            report.offending_weight = m;
            report.reason = "weight " + std::to_string(m) + " outside {2,3,4,6,inf}";
            if (!AlgebraicNumber::minus_two_cos_pi_over(m)) report.exact = false;
            break;
        }
    }
    const GramMatrix g = gram_matrix(graph);
    if (!g.exact_complete()) return report;
    report.cycles = cycle_products(g);
    if (report.verdict == Arithmeticity::NonArithmetic) return report;
    for (const auto& c : report.cycles) {
        if (!c.product_2g.is_rational_integer()) {
            report.verdict = Arithmeticity::NonArithmetic;
            report.offending_cycle = c;
            report.reason = "cycle product " + c.product_2g.to_string() + " is not a rational integer";
            return report;
        }
    }
    report.reason = report.cycles.empty() ? "admissible weights, no cycles" : "admissible weights, all cycle products integral";
    return report;
}

double triangle_area(double p, double q) {
    if (std::isnan(p) || std::isnan(q) || p < 2.0 || q < 2.0) throw DomainError("triangle orders must be >= 2");
    const double inv_p = std::isinf(p) ? 0.0 : 1.0 / p;
    const double inv_q = std::isinf(q) ? 0.0 : 1.0 / q;
    const double defect = 0.5 - inv_p - inv_q;
    if (!(defect > 1e-15)) throw DomainError("orders define a Euclidean or spherical triangle");
    return kPi * defect;
}

}  // namespace cuspvol
