#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cuspvol/cuspvol.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCertification = 1;
constexpr int kExitUsage = 2;

struct CommandError {
    std::string message;
};

void check(cv_status status) {
    if (status != CV_OK) throw CommandError{std::string(cv_status_name(status)) + ": " + cv_last_error()};
}

std::string take(char* text) {
    std::string out(text ? text : "");
    cv_string_free(text);
    return out;
}

json take_json(char* text) { return json::parse(take(text)); }

struct GraphDeleter {
    void operator()(cv_graph* g) const { cv_graph_free(g); }
};
using GraphPtr = std::unique_ptr<cv_graph, GraphDeleter>;

struct ReportDeleter {
    void operator()(cv_report* r) const { cv_report_free(r); }
};
using ReportPtr = std::unique_ptr<cv_report, ReportDeleter>;

GraphPtr parse_graph(const std::string& symbol) {
    cv_graph* g = nullptr;
    check(cv_graph_parse(symbol.c_str(), &g));
    return GraphPtr(g);
}

double angle(const std::string& text) {
    double x = 0.0;
    check(cv_parse_angle(text.c_str(), &x));
    return x;
}

std::string fixed(double v, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, v);
    return buf;
}

std::string number_or_dash(const json& v, int places) { return v.is_number() ? fixed(v.get<double>(), places) : "-"; }

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw CommandError{"cannot write " + out_path};
    file << text;
}

struct Options {
    bool json = false;
    double tol = 0.0;
    std::string out;
};

int cmd_lob(const Options& o, const std::string& expr) {
    const double x = angle(expr);
    double value = 0.0;
    long terms = 0;
    double est = 0.0;
    check(cv_lob(x, o.tol, &value, &terms, &est));
    if (o.json)
        emit(json{{"expression", expr}, {"x", x}, {"value", value}, {"terms", terms}, {"est_error", est}}.dump(2) + "\n",
             o.out);
    else
        emit(fixed(value, 12) + "\n", o.out);
    return kExitOk;
}

int cmd_volume(const Options& o, const std::string& symbol, const std::vector<std::string>& ortho, bool truncated) {
    if (!ortho.empty()) {
        const double a = angle(ortho[0]);
        const double b = angle(ortho[1]);
        double value = 0.0;
        check(cv_vol_orthoscheme(a, b, truncated ? 1 : 0, &value));
        const std::string name = std::string(truncated ? "Rt(" : "R(") + ortho[0] + ", " + ortho[1] + ")";
        if (o.json)
            emit(json{{"kind", "orthoscheme"}, {"symbol", name}, {"alpha", a}, {"beta", b}, {"truncated", truncated},
                      {"value", value}}
                         .dump(2) +
                     "\n",
                 o.out);
        else
            emit(name + " = " + fixed(value, 12) + "\n", o.out);
        return kExitOk;
    }
    if (symbol.empty()) throw CLI::ValidationError("volume", "a symbol or --ortho is required");
    char* text = nullptr;
    check(cv_volume_json(symbol.c_str(), &text));
    const json entry = take_json(text);
    if (o.json)
        emit(entry.dump(2) + "\n", o.out);
    else
        emit(entry["symbol"].get<std::string>() + " = " + entry["closed_form"].get<std::string>() + " = " +
                 fixed(entry["value"].get<double>(), 12) + "\n",
             o.out);
    return kExitOk;
}

int cmd_gram(const Options& o, const std::string& symbol) {
    const auto g = parse_graph(symbol);
    char* text = nullptr;
    check(cv_graph_gram_json(g.get(), &text));
    const json gram = take_json(text);
    if (o.json) {
        emit(gram.dump(2) + "\n", o.out);
        return kExitOk;
    }
    std::ostringstream s;
    s << gram["symbol"].get<std::string>() << "\n";
    for (const auto& row : gram["gram"]) {
        for (std::size_t j = 0; j < row.size(); ++j) s << (j ? " " : "") << fixed(row[j].get<double>(), 9);
        s << "\n";
    }
    s << "signature " << gram["signature"].get<std::string>() << ", ideal vertices " << gram["ideal_vertices"].get<int>()
      << "\n";
    emit(s.str(), o.out);
    return kExitOk;
}

int cmd_cusps(const Options& o, const std::string& symbol) {
    const auto g = parse_graph(symbol);
    int cusps = 0;
    check(cv_graph_cusps(g.get(), &cusps));
    char* sym = nullptr;
    check(cv_graph_symbol(g.get(), &sym));
    const std::string canonical = take(sym);
    if (o.json)
        emit(json{{"symbol", canonical}, {"cusps", cusps}}.dump(2) + "\n", o.out);
    else
        emit(std::to_string(cusps) + "\n", o.out);
    return kExitOk;
}

int cmd_arithmetic(const Options& o, const std::string& symbol) {
    const auto g = parse_graph(symbol);
    int arithmetic = 0;
    char* text = nullptr;
    check(cv_graph_arithmeticity(g.get(), &arithmetic, &text));
    const json report = take_json(text);
    if (o.json) {
        emit(report.dump(2) + "\n", o.out);
        return kExitOk;
    }
    std::string line = report["verdict"].get<std::string>();
    if (!arithmetic) {
        if (report["offending_weight"].is_number())
            line += " (weight " + std::to_string(report["offending_weight"].get<int>()) + ")";
        else if (report["offending_cycle"].is_object())
            line += " (cycle product " + report["offending_cycle"]["product_g"].get<std::string>() + ")";
    }
    emit(line + "\n", o.out);
    return kExitOk;
}

int cmd_scenario(const Options& o, const std::string& id) {
    char* text = nullptr;
    check(cv_scenario_json(id.c_str(), &text));
    const json row = take_json(text);
    if (o.json) {
        emit(row.dump(2) + "\n", o.out);
        return kExitOk;
    }
    std::ostringstream s;
    s << row["id"].get<std::string>() << " " << row["name"].get<std::string>() << "\n"
      << "  constraint  " << row["constraint"].get<std::string>() << "\n"
      << "  d           " << number_or_dash(row["d"], 9) << "\n"
      << "  theta       " << number_or_dash(row["theta"], 9) << "\n"
      << "  cusp volume " << number_or_dash(row["cusp_volume"], 9) << "\n"
      << "  bound       " << number_or_dash(row["volume_bound"], 9) << "\n"
      << "  value       " << number_or_dash(row["value"], 9) << " (" << row["basis"].get<std::string>() << ")\n"
      << "  margin      " << number_or_dash(row["margin"], 9) << "\n"
      << "  verdict     " << row["verdict"].get<std::string>();
    if (row["witness"].is_string()) s << " " << row["witness"].get<std::string>();
    s << "\n";
    emit(s.str(), o.out);
    return kExitOk;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw CommandError{"cannot read " + path};
    std::ostringstream s;
    s << file.rdbuf();
    return s.str();
}

int cmd_certify(const Options& o, const std::string& only, const std::string& fixture_path) {
    const std::string fixture = fixture_path.empty() ? "" : read_file(fixture_path);
    cv_report* raw = nullptr;
    check(cv_certify(only.empty() ? nullptr : only.c_str(), fixture_path.empty() ? nullptr : fixture.c_str(), &raw));
    const ReportPtr report(raw);
    char* text = nullptr;
    check(cv_report_json(report.get(), &text));
    const json j = take_json(text);
    const bool certified = cv_report_certified(report.get()) == 1;
    if (o.json) {
        emit(j.dump(2) + "\n", o.out);
    } else {
        std::ostringstream s;
        for (const auto& row : j["rows"]) {
            char line[256];
            std::snprintf(line, sizeof line, "%-12s %-8s %-20s %-12s %-12s %s\n", row["id"].get<std::string>().c_str(),
                          row["cusp_type"].get<std::string>().c_str(), row["verdict"].get<std::string>().c_str(),
                          number_or_dash(row["value"], 6).c_str(), number_or_dash(row["margin"], 6).c_str(),
                          row["witness"].is_string() ? row["witness"].get<std::string>().c_str() : "");
            s << line;
        }
        s << "minimum " << number_or_dash(j["minimum"], 9);
        if (j["argmin"].is_string()) s << " at " << j["argmin"].get<std::string>();
        s << "\n";
        for (const auto& f : j["failures"]) s << "FAIL " << f.get<std::string>() << "\n";
        s << (certified ? "certified" : "not certified") << "\n";
        emit(s.str(), o.out);
    }
    if (!certified) {
        for (const auto& f : j["failures"]) std::cerr << "failing: " << f.get<std::string>() << "\n";
        return kExitCertification;
    }
    return kExitOk;
}

struct RenderArgs {
    std::string scenario;
    std::string cusp_type = "2,3,6";
    double d = 1.0;
    std::string placement = "a6";
    int depth = 1;
    int width = 800;
    int height = 800;
    double scale = 160.0;
};

int cmd_render(const Options& o, const RenderArgs& r) {
    char* text = nullptr;
    if (!r.scenario.empty())
        check(cv_render_scenario(r.scenario.c_str(), r.depth, r.width, r.height, r.scale, &text));
    else
        check(cv_render(r.cusp_type.c_str(), r.d, r.placement.c_str(), r.depth, r.width, r.height, r.scale, &text));
    const std::string svg = take(text);
    if (o.json) {
        json spec{{"depth", r.depth}, {"width", r.width}, {"height", r.height}, {"scale", r.scale}};
        if (!r.scenario.empty()) {
            spec["scenario"] = r.scenario;
        } else {
            spec["cusp_type"] = r.cusp_type;
            spec["d"] = r.d;
            spec["placement"] = r.placement;
        }
        emit(json{{"spec", spec}, {"svg", svg}}.dump(2) + "\n", o.out);
    } else {
        emit(svg, o.out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Volumes of cusped hyperbolic Coxeter orbifolds and the minimal-volume case analysis"};
    app.require_subcommand(1);
    Options opts;
    const auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", opts.json, "Emit JSON");
        sub->add_option("--out", opts.out, "Write output to a file");
    };

    std::string expr;
    auto* lob = app.add_subcommand("lob", "Evaluate the Lobachevsky function");
    lob->add_option("x", expr, "Angle expression")->required();
    lob->add_option("--tol", opts.tol, "Series tolerance")->check(CLI::PositiveNumber);
    common(lob);

    std::string symbol;
    std::vector<std::string> ortho;
    bool truncated = false;
    auto* volume = app.add_subcommand("volume", "Volume of a catalogued polyhedron or an orthoscheme");
    volume->add_option("symbol", symbol, "Coxeter symbol or catalog name");
    auto* ortho_opt = volume->add_option("--ortho", ortho, "Orthoscheme angles alpha beta")->expected(2);
    volume->add_flag("--truncated", truncated, "Truncate the ultraideal vertex")->needs(ortho_opt);
    common(volume);

    auto* gram = app.add_subcommand("gram", "Gram matrix and signature");
    gram->add_option("symbol", symbol, "Coxeter symbol")->required();
    common(gram);

    auto* cusps = app.add_subcommand("cusps", "Count ideal vertices");
    cusps->add_option("symbol", symbol, "Coxeter symbol")->required();
    common(cusps);

    auto* arithmetic = app.add_subcommand("arithmetic", "Arithmeticity by cycle products");
    arithmetic->add_option("symbol", symbol, "Coxeter symbol")->required();
    common(arithmetic);

    std::string id;
    auto* scenario = app.add_subcommand("scenario", "Solve one case-analysis row");
    scenario->add_option("id", id, "Row id")->required();
    common(scenario);

    std::string only;
    std::string fixture;
    auto* certify = app.add_subcommand("certify", "Run the full case analysis");
    certify->add_option("--only", only, "Restrict to a cusp type or verdict class");
    certify->add_option("--fixture", fixture, "JSON file patching registry rows");
    common(certify);

    RenderArgs render_args;
    auto* render = app.add_subcommand("render", "SVG cusp diagram");
    auto* scen_opt = render->add_option("--scenario", render_args.scenario, "Row id");
    render->add_option("--type", render_args.cusp_type, "Cusp type 2,3,6 or 2,4,4")->excludes(scen_opt);
    render->add_option("--d", render_args.d, "Distance of full-sized balls")->excludes(scen_opt);
    render->add_option("--placement", render_args.placement, "a2, a3, a4 or a6")->excludes(scen_opt);
    render->add_option("--depth", render_args.depth, "Ball levels")->check(CLI::Range(0, 6));
    render->add_option("--width", render_args.width, "Canvas width in px")->check(CLI::PositiveNumber);
    render->add_option("--height", render_args.height, "Canvas height in px")->check(CLI::PositiveNumber);
    render->add_option("--scale", render_args.scale, "Pixels per unit")->check(CLI::PositiveNumber);
    common(render);

    try {
        app.parse(argc, argv);
        if (lob->parsed()) return cmd_lob(opts, expr);
        if (volume->parsed()) return cmd_volume(opts, symbol, ortho, truncated);
        if (gram->parsed()) return cmd_gram(opts, symbol);
        if (cusps->parsed()) return cmd_cusps(opts, symbol);
        if (arithmetic->parsed()) return cmd_arithmetic(opts, symbol);
        if (scenario->parsed()) return cmd_scenario(opts, id);
        if (certify->parsed()) return cmd_certify(opts, only, fixture);
        if (render->parsed()) return cmd_render(opts, render_args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
