#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include "json.hpp"

#include "cuspvol/algebraic.hpp"

namespace cuspvol {

enum class LabelKind { Finite, Infinity, Dotted };

struct EdgeLabel {
    LabelKind kind = LabelKind::Finite;
    int weight = 3;                 // meaningful for Finite
    std::optional<double> length;   // meaningful for Dotted

    static EdgeLabel finite(int m) { return {LabelKind::Finite, m, std::nullopt}; }
    static EdgeLabel infinity() { return {LabelKind::Infinity, 0, std::nullopt}; }
    static EdgeLabel dotted(std::optional<double> l = std::nullopt) { return {LabelKind::Dotted, 0, l}; }
    friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

struct Edge {
    int i = 0;
    int j = 0;
    EdgeLabel label;
    friend bool operator==(const Edge&, const Edge&) = default;
};

class CoxeterGraph {
public:
    CoxeterGraph() = default;
    explicit CoxeterGraph(int node_count) : node_count_(node_count) {}

    int node_count() const { return node_count_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Validates i != j, range, no duplicate pair, finite weight >= 3.
    void add_edge(int i, int j, EdgeLabel label);
    std::optional<EdgeLabel> label(int i, int j) const;
    bool has_dotted() const;

    friend bool operator==(const CoxeterGraph&, const CoxeterGraph&) = default;

private:
    int node_count_ = 0;
    std::vector<Edge> edges_;
};

CoxeterGraph parse_coxeter_symbol(std::string_view text);
std::string to_symbol(const CoxeterGraph& graph);

CoxeterGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const CoxeterGraph& graph);

using DottedParams = std::map<std::pair<int, int>, double>;

struct GramMatrix {
    int n = 0;
    Eigen::MatrixXd entries;
    std::vector<std::vector<std::optional<AlgebraicNumber>>> exact2g;

    bool exact_complete() const;
};

GramMatrix gram_matrix(const CoxeterGraph& graph, const DottedParams& dotted = {});

struct Inertia {
    int positive = 0;
    int zero = 0;
    int negative = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

inline constexpr double kZeroEigenThreshold = 1e-9;

Inertia inertia(const Eigen::MatrixXd& symmetric);
inline Inertia inertia(const GramMatrix& g) { return inertia(g.entries); }

enum class VertexKind { Finite, Ideal, Ultraideal };
std::string to_string(VertexKind kind);

// Vertex i is opposite facet i.
std::vector<VertexKind> classify_vertices(const GramMatrix& g);

// Ideal vertices of any finite-volume Coxeter polyhedron in H^3, counted as
// parabolic subdiagrams of rank 2.
int ideal_vertex_count(const GramMatrix& g);

struct Cycle {
    std::vector<int> nodes;
    AlgebraicNumber product_2g;
    AlgebraicNumber product_g;
};

std::vector<Cycle> cycle_products(const GramMatrix& g);

enum class Arithmeticity { Arithmetic, NonArithmetic };
std::string to_string(Arithmeticity a);

struct ArithmeticityReport {
    Arithmeticity verdict = Arithmeticity::Arithmetic;
    bool exact = true;
    std::string reason;
    std::optional<int> offending_weight;
    std::optional<Cycle> offending_cycle;
    std::vector<Cycle> cycles;
};

ArithmeticityReport arithmeticity(const CoxeterGraph& graph);
inline Arithmeticity is_arithmetic(const CoxeterGraph& graph) { return arithmeticity(graph).verdict; }

// Area of the hyperbolic triangle with angles pi/2, pi/p, pi/q; orders may be infinite.
double triangle_area(double p, double q);

}  // namespace cuspvol
