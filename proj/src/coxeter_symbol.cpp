#include <algorithm>
#include <cctype>
#include <sstream>

#include "cuspvol/coxeter.hpp"
#include "cuspvol/errors.hpp"

namespace cuspvol {
namespace {

constexpr std::string_view kInfinityGlyph = "\xE2\x88\x9E";
constexpr std::string_view kTimesGlyph = "\xC3\x97";

enum class Suffix { None, Power, Fork2, Fork3, Triangle, Complete, CompleteMinusEdge };

struct Item {
    EdgeLabel label;
    Suffix suffix = Suffix::None;
    int power = 1;
    std::size_t position = 0;
};

class SymbolParser {
public:
    explicit SymbolParser(std::string_view text) : text_(text) {}

    CoxeterGraph parse() {
        if (text_.empty()) throw ParseError("empty Coxeter symbol", 0);
        skip_space();
        expect('[');
        skip_space();
        CoxeterGraph g = peek() == '(' ? parse_cyclic() : parse_linear();
        skip_space();
        expect(']');
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool starts_with(std::string_view s) const { return text_.substr(pos_).substr(0, s.size()) == s; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(std::string_view s) {
        if (!starts_with(s)) return false;
        pos_ += s.size();
        return true;
    }

    int parse_uint() {
        const std::size_t start = pos_;
        long value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1'000'000) fail("integer too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected integer");
        return static_cast<int>(value);
    }

    EdgeLabel parse_weight() {
        skip_space();
        if (accept("inf") || accept(kInfinityGlyph)) return EdgeLabel::infinity();
        const std::size_t start = pos_;
        const int m = parse_uint();
        if (m < 3) throw ValidationError("weight " + std::to_string(m) + " < 3 at position " + std::to_string(start));
        return EdgeLabel::finite(m);
    }

    Item parse_item(bool cyclic) {
        skip_space();
        Item item;
        item.position = pos_;
        item.label = parse_weight();
        skip_space();
        if (!accept("^")) return item;
        skip_space();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            item.suffix = Suffix::Power;
            item.power = parse_uint();
            if (item.power < 1) fail("exponent must be positive");
            return item;
        }
        expect('{');
        skip_space();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::vector<int> ones;
            ones.push_back(parse_uint());
            while (accept(",")) ones.push_back(parse_uint());
            if (ones.size() == 1) {
                item.suffix = Suffix::Power;
                item.power = ones[0];
                if (item.power < 1) fail("exponent must be positive");
            } else if (ones == std::vector<int>{1, 1}) {
                item.suffix = Suffix::Fork2;
            } else if (ones == std::vector<int>{1, 1, 1}) {
                item.suffix = Suffix::Fork3;
            } else {
                fail("unsupported branch exponent");
            }
        } else if (accept("[3,3]")) {
            item.suffix = Suffix::Complete;
        } else if (accept("[3]")) {
            item.suffix = Suffix::Triangle;
        } else if (accept("[ ]")) {
            skip_space();
            if (!accept("x") && !accept(kTimesGlyph)) fail("expected 'x'");
            skip_space();
            if (!accept("[ ]")) fail("expected '[ ]'");
            item.suffix = Suffix::CompleteMinusEdge;
        } else {
            fail("unsupported exponent");
        }
        skip_space();
        expect('}');
        if (cyclic && item.suffix != Suffix::Power) fail("branch exponent inside cyclic symbol");
        return item;
    }

    std::vector<Item> parse_items(bool cyclic) {
        std::vector<Item> items;
        items.push_back(parse_item(cyclic));
        skip_space();
        while (accept(",")) {
            items.push_back(parse_item(cyclic));
            skip_space();
        }
        return items;
    }

    static std::vector<EdgeLabel> expand(const std::vector<Item>& items) {
        std::vector<EdgeLabel> labels;
        for (const auto& item : items)
            for (int r = 0; r < item.power; ++r) labels.push_back(item.label);
        return labels;
    }

    CoxeterGraph parse_cyclic() {
        expect('(');
        const auto items = parse_items(true);
        expect(')');
        const auto labels = expand(items);
        if (labels.size() < 3) fail("cyclic symbol needs at least three weights");
        const int n = static_cast<int>(labels.size());
        CoxeterGraph g(n);
        for (int k = 0; k < n; ++k) g.add_edge(k, (k + 1) % n, labels[k]);
        return g;
    }

    CoxeterGraph parse_linear() {
        const auto items = parse_items(false);
        const auto special = std::find_if(items.begin(), items.end(), [](const Item& it) {
            return it.suffix != Suffix::None && it.suffix != Suffix::Power;
        });
        if (special == items.end()) {
            const auto labels = expand(items);
            CoxeterGraph g(static_cast<int>(labels.size()) + 1);
            for (int k = 0; k < static_cast<int>(labels.size()); ++k) g.add_edge(k, k + 1, labels[k]);
            return g;
        }
        const auto index = static_cast<std::size_t>(special - items.begin());
        for (std::size_t k = 0; k < items.size(); ++k) {
            if (k == index) continue;
            if (items[k].suffix != Suffix::None && items[k].suffix != Suffix::Power) {
                pos_ = items[k].position;
                fail("only one branch exponent is supported");
            }
        }
        const EdgeLabel p = special->label;
        switch (special->suffix) {
            case Suffix::Fork2: {
                if (index != 0) {
                    pos_ = special->position;
                    fail("fork exponent must lead the symbol");
                }
                const auto tail = expand({items.begin() + 1, items.end()});
                CoxeterGraph g(3 + static_cast<int>(tail.size()));
                g.add_edge(0, 2, p);
                g.add_edge(1, 2, p);
                for (int k = 0; k < static_cast<int>(tail.size()); ++k) g.add_edge(2 + k, 3 + k, tail[k]);
                return g;
            }
            case Suffix::Fork3:
            case Suffix::Complete:
            case Suffix::CompleteMinusEdge: {
                if (items.size() != 1) {
                    pos_ = special->position;
                    fail("this exponent must stand alone");
                }
                CoxeterGraph g(4);
                if (special->suffix == Suffix::Fork3) {
                    for (int leaf = 0; leaf < 3; ++leaf) g.add_edge(leaf, 3, p);
                    return g;
                }
                for (int i = 0; i < 4; ++i)
                    for (int j = i + 1; j < 4; ++j)
                        if (special->suffix == Suffix::Complete || !(i == 0 && j == 1)) g.add_edge(i, j, p);
                return g;
            }
            case Suffix::Triangle: {
                if (index + 1 != items.size()) {
                    pos_ = special->position;
                    fail("triangle exponent must close the symbol");
                }
                const auto chain = expand({items.begin(), items.begin() + static_cast<long>(index)});
                const int k = static_cast<int>(chain.size());
                CoxeterGraph g(k + 3);
                for (int e = 0; e < k; ++e) g.add_edge(e, e + 1, chain[e]);
                g.add_edge(k, k + 1, p);
                g.add_edge(k + 1, k + 2, p);
                g.add_edge(k, k + 2, p);
                return g;
            }
            default: fail("internal parser state");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Sort key of a label: finite weights by value, infinity above every finite weight.
long label_key(const EdgeLabel& l) {
    switch (l.kind) {
        case LabelKind::Finite: return l.weight;
        case LabelKind::Infinity: return 1'000'000'000L;
        case LabelKind::Dotted: return 2'000'000'000L;
    }
    return 0;
}

std::string label_text(const EdgeLabel& l) {
    switch (l.kind) {
        case LabelKind::Finite: return std::to_string(l.weight);
        case LabelKind::Infinity: return std::string(kInfinityGlyph);
        case LabelKind::Dotted: return "dotted";
    }
    return "?";
}

std::string run_length(const std::vector<EdgeLabel>& seq) {
    std::string out;
    for (std::size_t k = 0; k < seq.size();) {
        std::size_t run = 1;
        while (k + run < seq.size() && seq[k + run] == seq[k]) ++run;
        if (!out.empty()) out += ',';
        out += label_text(seq[k]);
        if (run > 1) out += '^' + std::to_string(run);
        k += run;
    }
    return out;
}

std::string join(const std::vector<EdgeLabel>& seq) {
    std::string out;
    for (const auto& l : seq) {
        if (!out.empty()) out += ',';
        out += label_text(l);
    }
    return out;
}

bool lex_less(const std::vector<EdgeLabel>& a, const std::vector<EdgeLabel>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const EdgeLabel& x, const EdgeLabel& y) { return label_key(x) < label_key(y); });
}

struct Adjacency {
    int n;
    std::vector<std::vector<int>> nbrs;
    const CoxeterGraph* g;

    explicit Adjacency(const CoxeterGraph& graph) : n(graph.node_count()), nbrs(graph.node_count()), g(&graph) {
        for (const auto& e : graph.edges()) {
            nbrs[e.i].push_back(e.j);
            nbrs[e.j].push_back(e.i);
        }
        for (auto& v : nbrs) std::sort(v.begin(), v.end());
    }

    EdgeLabel at(int i, int j) const { return *g->label(i, j); }
    int degree(int v) const { return static_cast<int>(nbrs[v].size()); }

    bool connected() const {
        if (n == 0) return false;
        std::vector<bool> seen(n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : nbrs[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n;
    }

    // Labels along the unbranched path from `start`, leaving `prev` behind.
    std::vector<EdgeLabel> walk(int start, int prev) const {
        std::vector<EdgeLabel> seq;
        int cur = start;
        while (prev < 0 || degree(cur) == 2) {
            int next = -1;
            for (int w : nbrs[cur])
                if (w != prev) {
                    next = w;
                    break;
                }
            if (next < 0) break;
            seq.push_back(at(cur, next));
            prev = cur;
            cur = next;
        }
        return seq;
    }
};

std::string generic_text(const CoxeterGraph& g) {
    std::ostringstream out;
    out << "graph{" << g.node_count();
    for (const auto& e : g.edges()) out << ';' << e.i << '-' << e.j << ':' << label_text(e.label);
    out << '}';
    return out.str();
}

}  // namespace

void CoxeterGraph::add_edge(int i, int j, EdgeLabel label) {
    if (i == j) throw ValidationError("self-loop in Coxeter graph");
    if (i < 0 || j < 0 || i >= node_count_ || j >= node_count_) throw ValidationError("edge endpoint out of range");
    if (this->label(i, j)) throw ValidationError("duplicate edge in Coxeter graph");
    if (label.kind == LabelKind::Finite && label.weight < 3)
        throw ValidationError("finite weights must be integers >= 3");
    if (label.kind == LabelKind::Dotted && label.length && !(*label.length > 0.0))
        throw ValidationError("dotted edge length must be positive");
    edges_.push_back({std::min(i, j), std::max(i, j), label});
}

std::optional<EdgeLabel> CoxeterGraph::label(int i, int j) const {
    const int a = std::min(i, j);
    const int b = std::max(i, j);
    for (const auto& e : edges_)
        if (e.i == a && e.j == b) return e.label;
    return std::nullopt;
}

bool CoxeterGraph::has_dotted() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.label.kind == LabelKind::Dotted; });
}

CoxeterGraph parse_coxeter_symbol(std::string_view text) { return SymbolParser(text).parse(); }

std::string to_symbol(const CoxeterGraph& g) {
    const Adjacency adj(g);
    const int n = g.node_count();
    const int m = static_cast<int>(g.edges().size());
    if (n < 2 || !adj.connected() || g.has_dotted()) return generic_text(g);

    std::vector<int> degrees(n);
    for (int v = 0; v < n; ++v) degrees[v] = adj.degree(v);
    const int max_degree = *std::max_element(degrees.begin(), degrees.end());

    if (m == n - 1 && max_degree <= 2) {
        std::vector<std::vector<EdgeLabel>> candidates;
        for (int v = 0; v < n; ++v)
            if (degrees[v] == 1) candidates.push_back(adj.walk(v, -1));
        const auto best = std::min_element(candidates.begin(), candidates.end(), lex_less);
        return "[" + join(*best) + "]";
    }

    if (m == n && max_degree == 2) {
        std::vector<int> order{0};
        int prev = -1;
        int cur = 0;
        while (static_cast<int>(order.size()) < n) {
            const int next = adj.nbrs[cur][0] != prev ? adj.nbrs[cur][0] : adj.nbrs[cur][1];
            order.push_back(next);
            prev = cur;
            cur = next;
        }
        std::vector<EdgeLabel> ring;
        for (int k = 0; k < n; ++k) ring.push_back(adj.at(order[k], order[(k + 1) % n]));
        std::vector<EdgeLabel> best;
        for (int dir = 0; dir < 2; ++dir) {
            for (int s = 0; s < n; ++s) {
                std::vector<EdgeLabel> rot;
                for (int k = 0; k < n; ++k) rot.push_back(ring[(s + k) % n]);
                if (best.empty() || lex_less(rot, best)) best = rot;
            }
            std::reverse(ring.begin(), ring.end());
        }
        return "[(" + run_length(best) + ")]";
    }

    if (n == 4 && m == 6) {
        const EdgeLabel p = g.edges().front().label;
        if (std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return e.label == p; }))
            return "[" + label_text(p) + "^{[3,3]}]";
    }
    if (n == 4 && m == 5) {
        const EdgeLabel p = g.edges().front().label;
        if (std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return e.label == p; }))
            return "[" + label_text(p) + "^{[ ]x[ ]}]";
    }

    if (m == n - 1 && max_degree == 3 && std::count(degrees.begin(), degrees.end(), 3) == 1) {
        const int center = static_cast<int>(std::find(degrees.begin(), degrees.end(), 3) - degrees.begin());
        std::vector<std::vector<EdgeLabel>> arms;
        for (int w : adj.nbrs[center]) {
            std::vector<EdgeLabel> arm{adj.at(center, w)};
            const auto rest = adj.walk(w, center);
            arm.insert(arm.end(), rest.begin(), rest.end());
            arms.push_back(arm);
        }
        std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
        });
        if (arms[0].size() == 1 && arms[1].size() == 1 && arms[0] == arms[1]) {
            if (arms[2].size() == 1 && arms[2] == arms[0]) return "[" + label_text(arms[0][0]) + "^{1,1,1}]";
            return "[" + label_text(arms[0][0]) + "^{1,1}," + join(arms[2]) + "]";
        }
        if (arms[0].size() == 1 && arms[1].size() == 1 && arms[2].size() == 1 && arms[1] == arms[2])
            return "[" + label_text(arms[1][0]) + "^{1,1}," + join(arms[0]) + "]";
    }

    if (m == n && max_degree == 3 && std::count(degrees.begin(), degrees.end(), 3) == 1) {
        const int hub = static_cast<int>(std::find(degrees.begin(), degrees.end(), 3) - degrees.begin());
        std::vector<int> ring;
        int tail_start = -1;
        for (int w : adj.nbrs[hub]) {
            if (degrees[w] == 2) {
                const bool in_triangle = std::any_of(adj.nbrs[w].begin(), adj.nbrs[w].end(), [&](int x) {
                    return x != hub && adj.g->label(x, hub).has_value();
                });
                if (in_triangle) {
                    ring.push_back(w);
                    continue;
                }
            }
            tail_start = w;
        }
        if (ring.size() == 2 && tail_start >= 0) {
            const EdgeLabel p = adj.at(hub, ring[0]);
            if (adj.at(hub, ring[1]) == p && adj.at(ring[0], ring[1]) == p) {
                std::vector<EdgeLabel> tail{adj.at(hub, tail_start)};
                const auto rest = adj.walk(tail_start, hub);
                tail.insert(tail.end(), rest.begin(), rest.end());
                std::reverse(tail.begin(), tail.end());
                return "[" + join(tail) + "," + label_text(p) + "^{[3]}]";
            }
        }
    }
    return generic_text(g);
}

CoxeterGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
        throw ValidationError("graph JSON needs 'nodes' and 'edges'");
    const auto& nodes = j.at("nodes");
    int n = 0;
    if (nodes.is_number_integer()) {
        n = nodes.get<int>();
    } else if (nodes.is_array()) {
        n = static_cast<int>(nodes.size());
        for (int k = 0; k < n; ++k)
            if (nodes[k] != k) throw ValidationError("node ids must be 0..n-1 in order");
    } else {
        throw ValidationError("'nodes' must be a count or a list of ids");
    }
    if (n < 1) throw ValidationError("graph needs at least one node");
    CoxeterGraph g(n);
    for (const auto& e : j.at("edges")) {
        const int a = e.at("i").get<int>();
        const int b = e.at("j").get<int>();
        const auto& label = e.at("label");
        if (label.is_number_integer()) {
            g.add_edge(a, b, EdgeLabel::finite(label.get<int>()));
        } else if (label.is_string()) {
            const auto s = label.get<std::string>();
            if (s == "inf" || s == kInfinityGlyph) {
                g.add_edge(a, b, EdgeLabel::infinity());
            } else if (s == "dotted") {
                g.add_edge(a, b, EdgeLabel::dotted());
            } else {
                throw ValidationError("unknown edge label '" + s + "'");
            }
        } else if (label.is_object() && label.value("dotted", false)) {
            std::optional<double> length;
            if (label.contains("length")) length = label.at("length").get<double>();
            g.add_edge(a, b, EdgeLabel::dotted(length));
        } else {
            throw ValidationError("unsupported edge label");
        }
    }
    return g;
}

nlohmann::json graph_to_json(const CoxeterGraph& g) {
    nlohmann::json nodes = nlohmann::json::array();
    for (int k = 0; k < g.node_count(); ++k) nodes.push_back(k);
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) {
        nlohmann::json label;
        switch (e.label.kind) {
            case LabelKind::Finite: label = e.label.weight; break;
            case LabelKind::Infinity: label = "inf"; break;
            case LabelKind::Dotted:
                label = {{"dotted", true}};
                if (e.label.length) label["length"] = *e.label.length;
                break;
        }
        edges.push_back({{"i", e.i}, {"j", e.j}, {"label", label}});
    }
    return {{"nodes", nodes}, {"edges", edges}};
}

}  // namespace cuspvol
