#include "cuspvol/cuspvol.h"

#include <cstring>
#include <string>

#include "cuspvol/angle_expr.hpp"
#include "cuspvol/caser.hpp"
#include "cuspvol/coxeter.hpp"
#include "cuspvol/errors.hpp"
#include "cuspvol/lobachevsky.hpp"
#include "cuspvol/render.hpp"
#include "cuspvol/volume.hpp"

struct cv_graph {
    cuspvol::CoxeterGraph graph;
};

struct cv_report {
    cuspvol::Report report;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

template <class F>
cv_status guarded(F&& body) {
    try {
        last_error.clear();
        body();
        return CV_OK;
    } catch (const cuspvol::ParseError& e) {
        last_error = e.what();
        return CV_ERR_PARSE;
    } catch (const cuspvol::DomainError& e) {
        last_error = e.what();
        return CV_ERR_DOMAIN;
    } catch (const cuspvol::ValidationError& e) {
        last_error = e.what();
        return CV_ERR_VALIDATION;
    } catch (const cuspvol::UnsupportedError& e) {
        last_error = e.what();
        return CV_ERR_UNSUPPORTED;
    } catch (const cuspvol::NotFoundError& e) {
        last_error = e.what();
        return CV_ERR_NOT_FOUND;
    } catch (const cuspvol::InvalidRegime& e) {
        last_error = e.what();
        return CV_ERR_INVALID_REGIME;
    } catch (const json::exception& e) {
        last_error = e.what();
        return CV_ERR_PARSE;
    } catch (const std::exception& e) {
        last_error = e.what();
        return CV_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return CV_ERR_INTERNAL;
    }
}

bool any_null() { return false; }
template <class P, class... Ps>
bool any_null(P p, Ps... ps) {
    return p == nullptr || any_null(ps...);
}

cv_status null_argument() {
    last_error = "null argument";
    return CV_ERR_NULL_ARGUMENT;
}

char* dup(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string dump(const json& j) { return j.dump(2); }

json cycle_json(const cuspvol::Cycle& c) {
    return {{"nodes", c.nodes},
            {"product_2g", c.product_2g.to_string()},
            {"product_2g_value", c.product_2g.to_double()},
            {"product_g", c.product_g.to_string()},
            {"integral", c.product_2g.is_rational_integer()}};
}

json gram_json(const cuspvol::CoxeterGraph& g) {
    const auto gram = cuspvol::gram_matrix(g);
    json rows = json::array();
    json exact = json::array();
    for (int i = 0; i < gram.n; ++i) {
        json row = json::array();
        json erow = json::array();
        for (int j = 0; j < gram.n; ++j) {
            row.push_back(gram.entries(i, j));
            const auto& e = gram.exact2g[i][j];
            erow.push_back(e ? json(e->to_string()) : json(nullptr));
        }
        rows.push_back(row);
        exact.push_back(erow);
    }
    const auto in = cuspvol::inertia(gram);
    json kinds = json::array();
    if (gram.n == 4)
        for (auto k : cuspvol::classify_vertices(gram)) kinds.push_back(cuspvol::to_string(k));
    return {{"symbol", cuspvol::to_symbol(g)},
            {"n", gram.n},
            {"gram", rows},
            {"exact_2g", exact},
            {"inertia", {{"positive", in.positive}, {"zero", in.zero}, {"negative", in.negative}}},
            {"signature", "(" + std::to_string(in.positive) + "," + std::to_string(in.negative) + ")"},
            {"vertices", kinds},
            {"ideal_vertices", cuspvol::ideal_vertex_count(gram)}};
}

json arithmeticity_json(const cuspvol::CoxeterGraph& g, const cuspvol::ArithmeticityReport& r) {
    json cycles = json::array();
    for (const auto& c : r.cycles) cycles.push_back(cycle_json(c));
    return {{"symbol", cuspvol::to_symbol(g)},
            {"verdict", cuspvol::to_string(r.verdict)},
            {"exact", r.exact},
            {"reason", r.reason},
            {"offending_weight", r.offending_weight ? json(*r.offending_weight) : json(nullptr)},
            {"offending_cycle", r.offending_cycle ? cycle_json(*r.offending_cycle) : json(nullptr)},
            {"cycles", cycles}};
}

json computed_volume_json(const std::string& symbol) {
    const auto g = cuspvol::parse_coxeter_symbol(symbol);
    if (g.node_count() != 4) throw cuspvol::UnsupportedError("volume of an uncatalogued polyhedron: " + symbol);
    const auto expr = cuspvol::ideal_vertex_decomposition(g);
    const auto gram = cuspvol::gram_matrix(g);
    return {{"symbol", cuspvol::to_symbol(g)},
            {"closed_form", expr.simplified().text()},
            {"value", expr.evaluate()},
            {"decimal", nullptr},
            {"decimal_places", nullptr},
            {"kind", "tetrahedron"},
            {"cusps", cuspvol::ideal_vertex_count(gram)},
            {"arithmetic", cuspvol::to_string(cuspvol::is_arithmetic(g))}};
}

cuspvol::CuspType parse_cusp_type(const std::string& s) {
    if (s == "2,3,6" || s == "{2,3,6}") return cuspvol::CuspType::T236;
    if (s == "2,4,4" || s == "{2,4,4}") return cuspvol::CuspType::T244;
    if (s == "3,3,3" || s == "{3,3,3}") return cuspvol::CuspType::T333;
    throw cuspvol::ValidationError("unknown cusp type '" + s + "'");
}

cuspvol::Placement parse_placement(const std::string& s) {
    if (s == "a2") return cuspvol::Placement::A2;
    if (s == "a3") return cuspvol::Placement::A3;
    if (s == "a4") return cuspvol::Placement::A4;
    if (s == "a6") return cuspvol::Placement::A6;
    if (s == "none") return cuspvol::Placement::None;
    throw cuspvol::ValidationError("unknown placement '" + s + "'");
}

cuspvol::RenderSpec canvas(int depth, int width, int height, double scale) {
    cuspvol::RenderSpec spec;
    spec.depth = depth;
    if (width > 0) spec.width = width;
    if (height > 0) spec.height = height;
    if (scale > 0.0) spec.scale = scale;
    return spec;
}

}  // namespace

extern "C" {

const char* cv_last_error(void) { return last_error.c_str(); }

const char* cv_status_name(cv_status status) {
    switch (status) {
        case CV_OK: return "ok";
        case CV_ERR_DOMAIN: return "domain error";
        case CV_ERR_VALIDATION: return "validation error";
        case CV_ERR_PARSE: return "parse error";
        case CV_ERR_UNSUPPORTED: return "unsupported";
        case CV_ERR_NOT_FOUND: return "not found";
        case CV_ERR_INVALID_REGIME: return "invalid regime";
        case CV_ERR_NULL_ARGUMENT: return "null argument";
        case CV_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void cv_string_free(char* text) { delete[] text; }

cv_status cv_parse_angle(const char* text, double* out) {
    if (any_null(text, out)) return null_argument();
    return guarded([&] { *out = cuspvol::parse_angle(text); });
}

cv_status cv_lob(double x, double tol, double* value, long* terms, double* est_error) {
    if (any_null(value)) return null_argument();
    return guarded([&] {
        const auto r = cuspvol::lob(x, tol > 0.0 ? tol : cuspvol::kDefaultTol);
        *value = r.value;
        if (terms) *terms = r.terms_used;
        if (est_error) *est_error = r.est_error;
    });
}

cv_status cv_lob_integral(double x, double tol, double* value) {
    if (any_null(value)) return null_argument();
    return guarded([&] { *value = cuspvol::lob_integral_oracle(x, tol > 0.0 ? tol : cuspvol::kDefaultTol); });
}

cv_status cv_mu3(double* out) {
    if (any_null(out)) return null_argument();
    return guarded([&] { *out = cuspvol::mu3(); });
}

cv_status cv_omega3(double* out) {
    if (any_null(out)) return null_argument();
    return guarded([&] { *out = cuspvol::omega3(); });
}

cv_status cv_v_star(double* out) {
    if (any_null(out)) return null_argument();
    return guarded([&] { *out = cuspvol::v_star(); });
}

cv_status cv_d3_infinity(double* out) {
    if (any_null(out)) return null_argument();
    return guarded([&] { *out = cuspvol::d3_infinity(); });
}

cv_status cv_vol_orthoscheme(double alpha, double beta, int truncated, double* out) {
    if (any_null(out)) return null_argument();
    return guarded([&] { *out = cuspvol::vol_orthoscheme({alpha, beta, truncated != 0}); });
}

cv_status cv_vol_ideal_tetrahedron(double alpha, double beta, double gamma, double* out) {
    if (any_null(out)) return null_argument();
    return guarded([&] { *out = cuspvol::vol_ideal_tetrahedron({alpha, beta, gamma}); });
}

cv_status cv_volume_json(const char* symbol, char** json_out) {
    if (any_null(symbol, json_out)) return null_argument();
    return guarded([&] {
        json j;
        try {
            j = cuspvol::catalog_entry_json(cuspvol::vol_named(symbol));
        } catch (const cuspvol::NotFoundError&) {
            j = computed_volume_json(symbol);
        }
        *json_out = dup(dump(j));
    });
}

cv_status cv_catalog_json(char** json_out) {
    if (any_null(json_out)) return null_argument();
    return guarded([&] { *json_out = dup(dump(cuspvol::catalog_json())); });
}

cv_status cv_graph_parse(const char* symbol, cv_graph** out) {
    if (any_null(symbol, out)) return null_argument();
    return guarded([&] { *out = new cv_graph{cuspvol::parse_coxeter_symbol(symbol)}; });
}

cv_status cv_graph_from_json(const char* text, cv_graph** out) {
    if (any_null(text, out)) return null_argument();
    return guarded([&] { *out = new cv_graph{cuspvol::graph_from_json(json::parse(text))}; });
}

void cv_graph_free(cv_graph* graph) { delete graph; }

cv_status cv_graph_symbol(const cv_graph* graph, char** symbol) {
    if (any_null(graph, symbol)) return null_argument();
    return guarded([&] { *symbol = dup(cuspvol::to_symbol(graph->graph)); });
}

cv_status cv_graph_json(const cv_graph* graph, char** json_out) {
    if (any_null(graph, json_out)) return null_argument();
    return guarded([&] { *json_out = dup(dump(cuspvol::graph_to_json(graph->graph))); });
}

cv_status cv_graph_gram_json(const cv_graph* graph, char** json_out) {
    if (any_null(graph, json_out)) return null_argument();
    return guarded([&] { *json_out = dup(dump(gram_json(graph->graph))); });
}

cv_status cv_graph_cusps(const cv_graph* graph, int* out) {
    if (any_null(graph, out)) return null_argument();
    return guarded([&] { *out = cuspvol::ideal_vertex_count(cuspvol::gram_matrix(graph->graph)); });
}

cv_status cv_graph_arithmeticity(const cv_graph* graph, int* arithmetic, char** json_out) {
    if (any_null(graph, arithmetic)) return null_argument();
    return guarded([&] {
        const auto r = cuspvol::arithmeticity(graph->graph);
        *arithmetic = r.verdict == cuspvol::Arithmeticity::Arithmetic ? 1 : 0;
        if (json_out) *json_out = dup(dump(arithmeticity_json(graph->graph, r)));
    });
}

cv_status cv_graph_volume(const cv_graph* graph, double* out) {
    if (any_null(graph, out)) return null_argument();
    return guarded([&] { *out = cuspvol::vol_coxeter_tetrahedron(graph->graph); });
}

cv_status cv_scenario_ids_json(char** json_out) {
    if (any_null(json_out)) return null_argument();
    return guarded([&] {
        json ids = json::array();
        for (const auto& s : cuspvol::scenario_registry()) ids.push_back(s.id);
        *json_out = dup(dump(ids));
    });
}

cv_status cv_scenario_json(const char* id, char** json_out) {
    if (any_null(id, json_out)) return null_argument();
    return guarded([&] {
        const auto solution = cuspvol::solve_scenario(cuspvol::find_scenario(id));
        *json_out = dup(dump(cuspvol::solution_json(solution)));
    });
}

cv_status cv_certify(const char* only, const char* fixture_json, cv_report** out) {
    if (any_null(out)) return null_argument();
    return guarded([&] {
        cuspvol::RunOptions options;
        if (only) options.only = only;
        if (fixture_json) options.fixture = json::parse(fixture_json);
        *out = new cv_report{cuspvol::run_case_analysis(options)};
    });
}

void cv_report_free(cv_report* report) { delete report; }

int cv_report_certified(const cv_report* report) { return report && report->report.certified ? 1 : 0; }

cv_status cv_report_minimum(const cv_report* report, double* out) {
    if (any_null(report, out)) return null_argument();
    if (!report->report.minimum) {
        last_error = "the run produced no volume";
        return CV_ERR_NOT_FOUND;
    }
    last_error.clear();
    *out = *report->report.minimum;
    return CV_OK;
}

cv_status cv_report_json(const cv_report* report, char** json_out) {
    if (any_null(report, json_out)) return null_argument();
    return guarded([&] { *json_out = dup(dump(cuspvol::report_json(report->report))); });
}

cv_status cv_report_failures_json(const cv_report* report, char** json_out) {
    if (any_null(report, json_out)) return null_argument();
    return guarded([&] { *json_out = dup(dump(json(report->report.failures))); });
}

cv_status cv_identities_json(char** json_out) {
    if (any_null(json_out)) return null_argument();
    return guarded([&] {
        json arr = json::array();
        for (const auto& c : cuspvol::verify_appendix_identities()) arr.push_back(cuspvol::identity_json(c));
        *json_out = dup(dump(arr));
    });
}

cv_status cv_thresholds_json(char** json_out) {
    if (any_null(json_out)) return null_argument();
    return guarded([&] {
        json obj = json::object();
        for (const auto& t : cuspvol::scenario_thresholds())
            obj[t.name] = {{"closed", t.closed}, {"bisection", t.bisection}};
        *json_out = dup(dump(obj));
    });
}

cv_status cv_render_scenario(const char* id, int depth, int width, int height, double scale, char** svg) {
    if (any_null(id, svg)) return null_argument();
    return guarded([&] {
        auto spec = canvas(depth, width, height, scale);
        spec.scenario = id;
        *svg = dup(cuspvol::render_svg(spec));
    });
}

cv_status cv_render(const char* cusp_type, double d, const char* placement, int depth, int width, int height,
                    double scale, char** svg) {
    if (any_null(cusp_type, placement, svg)) return null_argument();
    return guarded([&] {
        auto spec = canvas(depth, width, height, scale);
        spec.cusp_type = parse_cusp_type(cusp_type);
        spec.placement = parse_placement(placement);
        spec.d = d;
        *svg = dup(cuspvol::render_svg(spec));
    });
}

}  // extern "C"
