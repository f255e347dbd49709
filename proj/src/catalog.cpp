#include <algorithm>
#include <cmath>

#include "cuspvol/errors.hpp"
#include "cuspvol/volume.hpp"

namespace cuspvol {
namespace {

struct TetrahedronSeed {
    const char* symbol;
    double decimal;
};

// The 23 non-compact Coxeter tetrahedra with volumes rounded to six places.
constexpr TetrahedronSeed kTetrahedra[] = {
    {"[3,3,6]", 0.042289},        {"[3,4,4]", 0.076330},        {"[4,3,6]", 0.105723},
    {"[3,6,3]", 0.169157},        {"[5,3,6]", 0.171502},        {"[4,4,4]", 0.228991},
    {"[6,3,6]", 0.253735},        {"[3^{1,1},6]", 0.211446},    {"[4^{1,1},3]", 0.152661},
    {"[4^{1,1,1}]", 0.457983},    {"[3,3^{[3]}]", 0.084578},    {"[4,3^{[3]}]", 0.211446},
    {"[5,3^{[3]}]", 0.343003},    {"[6,3^{[3]}]", 0.507471},    {"[3^{[ ]x[ ]}]", 0.422892},
    {"[3^{[3,3]}]", 1.014942},    {"[(3^3,6)]", 0.364107},      {"[(3^2,4^2)]", 0.305322},
    {"[(3,4^3)]", 0.556282},      {"[(3,4,3,6)]", 0.525840},    {"[(3,5,3,6)]", 0.672986},
    {"[(3,6,3,6)]", 0.845785},    {"[(4^4)]", 0.915966},
};

const double kL3 = kPi / 3.0;
const double kL4 = kPi / 4.0;

struct NamedForm {
    const char* symbol;
    const char* text;
    LobSum expression;
};

std::vector<NamedForm> named_forms() {
    return {
        {"[3,3,6]", "L(pi/3)/8", {{1.0 / 8.0, kL3}}},
        {"[3,4,4]", "L(pi/4)/6", {{1.0 / 6.0, kL4}}},
        {"[4,3,6]", "5/16 L(pi/3)", {{5.0 / 16.0, kL3}}},
        {"[3,6,3]", "mu3/6 = L(pi/3)/2", {{0.5, kL3}}},
        {"[5,3,6]", "L(pi/3)/2 + (L(pi/6+pi/5) + L(pi/6-pi/5))/4",
         {{0.5, kL3}, {0.25, kPi / 6.0 + kPi / 5.0}, {0.25, kPi / 6.0 - kPi / 5.0}}},
        {"[4,4,4]", "L(pi/4)/2", {{0.5, kL4}}},
        {"[6,3,6]", "3/4 L(pi/3)", {{0.75, kL3}}},
        {"[(3^3,6)]", "5/8 L(pi/3) + 1/3 L(pi/4)", {{5.0 / 8.0, kL3}, {1.0 / 3.0, kL4}}},
        {"[3^{[3,3]}]", "mu3 = 3 L(pi/3)", {{3.0, kL3}}},
    };
}

CatalogEntry tetrahedron_entry(const TetrahedronSeed& seed, const std::vector<NamedForm>& forms) {
    const CoxeterGraph g = parse_coxeter_symbol(seed.symbol);
    CatalogEntry e;
    e.symbol = seed.symbol;
    e.kind = "tetrahedron";
    e.decimal = seed.decimal;
    const auto kinds = classify_vertices(gram_matrix(g));
    e.cusps = static_cast<int>(std::count(kinds.begin(), kinds.end(), VertexKind::Ideal));
    e.arithmetic = is_arithmetic(g);
    const auto form = std::find_if(forms.begin(), forms.end(), [&](const NamedForm& f) { return e.symbol == f.symbol; });
    if (form != forms.end()) {
        e.closed_form = form->text;
        e.expression = form->expression;
    } else {
        e.expression = ideal_vertex_decomposition(g).simplified();
        e.closed_form = e.expression.text();
    }
    e.value = e.expression.evaluate();
    return e;
}

const CatalogEntry& find_exact(const std::vector<CatalogEntry>& entries, const std::string& symbol) {
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const CatalogEntry& e) { return e.symbol == symbol; });
    if (it == entries.end()) throw NotFoundError("unknown catalog symbol '" + symbol + "'");
    return *it;
}

CatalogEntry derived(const std::vector<CatalogEntry>& entries, const std::string& symbol, const std::string& parent,
                     const std::string& text, LobSum expression, double decimal, int places, std::optional<int> cusps) {
    const CatalogEntry& p = find_exact(entries, parent);
    CatalogEntry e;
    e.symbol = symbol;
    e.kind = "derived";
    e.parent = parent;
    e.closed_form = text;
    e.expression = std::move(expression);
    e.value = e.expression.evaluate();
    e.decimal = decimal;
    e.decimal_places = places;
    e.cusps = cusps;
    e.arithmetic = p.arithmetic;
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    const auto forms = named_forms();
    std::vector<CatalogEntry> entries;
    for (const auto& seed : kTetrahedra) entries.push_back(tetrahedron_entry(seed, forms));

    {
        const CoxeterGraph pyramid = parse_coxeter_symbol("[inf,3,6,inf]");
        CatalogEntry e;
        e.symbol = to_symbol(pyramid);
        e.kind = "polyhedron";
        e.closed_form = "5/4 L(pi/3)";
        e.expression = {{1.25, kL3}};
        e.value = e.expression.evaluate();
        e.decimal = 0.42289;
        e.decimal_places = 5;
        e.cusps = ideal_vertex_count(gram_matrix(pyramid));
        e.arithmetic = is_arithmetic(pyramid);
        entries.push_back(e);
    }

    const LobSum half_3_4 = find_exact(entries, "[(3,4^3)]").expression.scaled(0.5);
    const LobSum half_3_6 = find_exact(entries, "[(3^3,6)]").expression.scaled(0.5);
    const LobSum v536 = find_exact(entries, "[5,3,6]").expression;
    const LobSum v3336 = find_exact(entries, "[(3^3,6)]").expression;
    std::vector<CatalogEntry> extra{
        derived(entries, "[3,6,3]:Z2-extension", "[3,6,3]", "L(pi/3)/4", {{0.25, kL3}}, 0.084578, 6, 1),
        derived(entries, "[6,3,6]:commensurable", "[6,3,6]", "3/8 L(pi/3)", {{3.0 / 8.0, kL3}}, 0.126868, 6, 1),
        derived(entries, "[(3^3,6)]:half", "[(3^3,6)]", "vol([(3^3,6)])/2", half_3_6, 0.182054, 6, 1),
        derived(entries, "[(3,4^3)]:half", "[(3,4^3)]", "vol([(3,4^3)])/2", half_3_4, 0.27814, 5, 1),
        derived(entries, "[5,3,6]:manifold-bound", "[5,3,6]", "120 v*", v536.scaled(120.0), 20.580199, 6, std::nullopt),
        derived(entries, "[(3^3,6)]:manifold-bound", "[(3^3,6)]", "24 vol([(3^3,6)])", v3336.scaled(24.0), 8.738570, 6,
                std::nullopt),
    };
    entries.insert(entries.end(), extra.begin(), extra.end());

    CatalogEntry mu = find_exact(entries, "[3^{[3,3]}]");
    mu.symbol = "mu3";
    mu.kind = "constant";
    mu.parent = "[3^{[3,3]}]";
    entries.push_back(mu);

    CatalogEntry omega;
    omega.symbol = "omega3";
    omega.kind = "constant";
    omega.closed_form = "8 L(pi/4)";
    omega.expression = {{8.0, kL4}};
    omega.value = omega.expression.evaluate();
    omega.decimal = 3.663862;
    omega.cusps = 6;
    entries.push_back(omega);
    return entries;
}

std::string canonical_key(std::string_view symbol) {
    if (symbol == "v*" || symbol == "v_*") return "[5,3,6]";
    if (symbol == "\xCE\xBC\xE2\x82\x83") return "mu3";
    if (symbol == "\xCF\x89\xE2\x82\x83") return "omega3";
    const auto colon = symbol.find(':');
    const std::string_view base = symbol.substr(0, colon);
    std::string key;
    try {
        key = to_symbol(parse_coxeter_symbol(base));
    } catch (const Error&) {
        key = std::string(base);
    }
    if (colon != std::string_view::npos) key += std::string(symbol.substr(colon));
    return key;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& vol_named(std::string_view symbol) {
    if (symbol.empty()) throw NotFoundError("empty catalog symbol");
    return find_exact(catalog(), canonical_key(symbol));
}

std::vector<std::string> noncompact_tetrahedra() {
    std::vector<std::string> out;
    for (const auto& seed : kTetrahedra) out.emplace_back(seed.symbol);
    return out;
}

nlohmann::json catalog_entry_json(const CatalogEntry& e) {
    nlohmann::json j{{"symbol", e.symbol},     {"closed_form", e.closed_form}, {"decimal", e.decimal},
                     {"decimal_places", e.decimal_places}, {"value", e.value}, {"kind", e.kind}};
    j["cusps"] = e.cusps ? nlohmann::json(*e.cusps) : nlohmann::json(nullptr);
    j["arithmetic"] = e.arithmetic ? nlohmann::json(to_string(*e.arithmetic)) : nlohmann::json(nullptr);
    if (!e.parent.empty()) j["parent"] = e.parent;
    return j;
}

nlohmann::json catalog_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : catalog()) arr.push_back(catalog_entry_json(e));
    return arr;
}

}  // namespace cuspvol
