#pragma once

// Certificate documents as JSON. Output is byte-stable: keys sorted,
// two-space indent, floating point numbers fixed at six decimals.

#include <cstdio>
#include <string>

#include "json.hpp"

#include "graphtrials/errors.hpp"
#include "graphtrials/metrics.hpp"
#include "graphtrials/trial.hpp"
#include "graphtrials/verify.hpp"

namespace graphtrials {

using Json = nlohmann::json;

inline constexpr int kDocumentVersion = 1;

struct CertificateDocument {
    Certificate certificate;
    std::string note;  // optional provenance, omitted when empty
    friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

// ---------------------------------------------------------------------------
// Writer

namespace detail {

inline void dump_to(const Json& j, std::string& out, int indent, int depth) {
    auto newline = [&](int d) {
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += Json(it.key()).dump();
                out += ": ";
                dump_to(it.value(), out, indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // arrays of scalars stay on one line
            bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i > 0) out += flat ? ", " : ",";
                if (!flat) newline(depth + 1);
                dump_to(j[i], out, indent, depth + 1);
            }
            if (!flat) newline(depth);
            out += ']';
            return;
        }
        case Json::value_t::number_float: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6f", j.get<double>());
            std::string s = buf;
            if (s == "-0.000000") s = "0.000000";
            out += s;
            return;
        }
        default: out += j.dump(); return;
    }
}

}  // namespace detail

/// Deterministic pretty printer; ends with a newline.
inline std::string dump_json(const Json& j) {
    std::string out;
    detail::dump_to(j, out, 2, 0);
    out += '\n';
    return out;
}

namespace detail {

inline Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back(edge_json(e));
    return out;
}

inline Json point_json(Point p) { return Json::array({p.x, p.y}); }

inline Json paged_json(const std::vector<PagedEdge>& pages) {
    Json out = Json::array();
    for (const PagedEdge& p : pages) out.push_back({{"edge", edge_json(p.edge)}, {"page", p.page}});
    return out;
}

inline std::string_view to_string(MarkClass c) { return c == MarkClass::Evidence ? "evidence" : "block_boundary"; }

inline std::string_view to_string(BlockExpect e) {
    switch (e) {
        case BlockExpect::Empty: return "empty";
        case BlockExpect::Filled: return "filled";
        case BlockExpect::Dominating: return "dominating";
    }
    return "";
}

inline Json evidence_json(const Evidence& ev) {
    Json j = std::visit(
        [](const auto& w) -> Json {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, SpanTree>) return {{"root", w.root}, {"parent", w.parent}, {"depth", w.depth}};
            else if constexpr (std::is_same_v<W, Partition>) return {{"a", w.a}, {"b", w.b}};
            else if constexpr (std::is_same_v<W, VertexCut>) return {{"cut", w.cut}, {"a", w.a}, {"b", w.b}};
            else if constexpr (std::is_same_v<W, Cycle>) return {{"vertices", w.vertices}};
            else if constexpr (std::is_same_v<W, Coloring>) return {{"k", w.k}, {"colors", w.colors}};
            else if constexpr (std::is_same_v<W, MissingEdge>) return {{"u", w.u}, {"v", w.v}};
            else if constexpr (std::is_same_v<W, CompleteWitness>) return Json::object();
            else if constexpr (std::is_same_v<W, WitnessSet>)
                return {{"kind", std::string(graphtrials::to_string(w.kind))}, {"vertices", w.vertices}};
            else if constexpr (std::is_same_v<W, BfsWitness>)
                return {{"root", w.root}, {"depth", w.depth}, {"parent", w.parent}, {"path", w.path}};
            else if constexpr (std::is_same_v<W, SparseSubgraph>) return {{"k", w.k}, {"edges", edges_json(w.edges)}};
            else
                return {{"k", w.k},
                        {"discipline", std::string(graphtrials::to_string(w.discipline))},
                        {"order", w.order},
                        {"pages", paged_json(w.pages)}};
        },
        ev);
    j["tag"] = std::string(evidence_tag(ev));
    return j;
}

inline Json layout_json(const Layout& layout) {
    Json j = std::visit(
        [](const auto& l) -> Json {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, NodeLinkLayout>) {
                Json pos = Json::array();
                for (Point p : l.positions) pos.push_back(point_json(p));
                Json notes = Json::array();
                for (const auto& a : l.annotations) notes.push_back({{"label", a.label}, {"at", point_json(a.at)}});
                return {{"kind", l.kind},
                        {"positions", pos},
                        {"edges", edges_json(l.edges)},
                        {"highlight_vertices", l.highlight_vertices},
                        {"highlight_edges", edges_json(l.highlight_edges)},
                        {"annotations", notes}};
            } else if constexpr (std::is_same_v<L, MatrixLayout>) {
                Json marks = Json::array();
                for (const auto& m : l.marks) {
                    marks.push_back({{"row", m.row}, {"col", m.col}, {"class", std::string(to_string(m.cls))}});
                }
                Json blocks = Json::array();
                for (const auto& b : l.blocks) {
                    blocks.push_back({{"begin", b.begin}, {"end", b.end}, {"expect", std::string(to_string(b.expect))}});
                }
                return {{"order", l.order}, {"widths", l.widths}, {"edges", edges_json(l.edges)}, {"marks", marks},
                        {"blocks", blocks}};
            } else {
                return {{"k", l.k},
                        {"discipline", std::string(graphtrials::to_string(l.discipline))},
                        {"order", l.order},
                        {"edges", paged_json(l.edges)}};
            }
        },
        layout);
    j["style"] = std::string(to_string(style_of(layout)));
    return j;
}

}  // namespace detail

inline Json to_json(const CertificateDocument& doc) {
    const Certificate& c = doc.certificate;
    Json j;
    j["version"] = kDocumentVersion;
    j["graph"] = {{"n", c.graph.n()}, {"edges", detail::edges_json(c.graph.edges())}};
    j["assertion"] = {{"kind", std::string(to_string(c.assertion.kind))},
                      {"k", c.assertion.k},
                      {"u", c.assertion.u},
                      {"v", c.assertion.v}};
    j["evidence"] = detail::evidence_json(c.evidence);
    j["layout"] = detail::layout_json(c.layout);
    if (!doc.note.empty()) j["note"] = doc.note;
    return j;
}

inline std::string write_certificate(const CertificateDocument& doc) { return dump_json(to_json(doc)); }

// ---------------------------------------------------------------------------
// Reader

namespace detail {

class Reader {
public:
    explicit Reader(const Json& j, std::string path = "") : j_(j), path_(std::move(path)) {}

    Reader at(const std::string& key) const {
        if (!j_.is_object()) fail("expected an object");
        auto it = j_.find(key);
        if (it == j_.end()) throw SchemaError("missing field " + path_ + "/" + key);
        return Reader(*it, path_ + "/" + key);
    }

    bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

    int integer() const {
        if (!j_.is_number_integer()) fail("expected an integer");
        auto v = j_.get<long long>();
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail("integer out of range");
        return static_cast<int>(v);
    }

    double number() const {
        if (!j_.is_number()) fail("expected a number");
        return j_.get<double>();
    }

    std::string string() const {
        if (!j_.is_string()) fail("expected a string");
        return j_.get<std::string>();
    }

    std::vector<Reader> items() const {
        if (!j_.is_array()) fail("expected an array");
        std::vector<Reader> out;
        for (std::size_t i = 0; i < j_.size(); ++i) out.emplace_back(j_[i], path_ + "/" + std::to_string(i));
        return out;
    }

    std::vector<int> ints() const {
        std::vector<int> out;
        for (const auto& r : items()) out.push_back(r.integer());
        return out;
    }

    Edge edge() const {
        auto xs = items();
        if (xs.size() != 2) fail("expected an edge [u, v]");
        return Edge(xs[0].integer(), xs[1].integer());
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (const auto& r : items()) out.push_back(r.edge());
        return out;
    }

    Point point() const {
        auto xs = items();
        if (xs.size() != 2) fail("expected a point [x, y]");
        return {xs[0].number(), xs[1].number()};
    }

    std::vector<PagedEdge> paged() const {
        std::vector<PagedEdge> out;
        for (const auto& r : items()) out.push_back({r.at("edge").edge(), r.at("page").integer()});
        return out;
    }

    template <class Enum, std::size_t N>
    Enum choice(const std::pair<std::string_view, Enum> (&options)[N]) const {
        std::string s = string();
        for (const auto& [name, value] : options) {
            if (name == s) return value;
        }
        fail("unknown value \"" + s + "\"");
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw SchemaError((path_.empty() ? std::string("/") : path_) + ": " + what);
    }

private:
    const Json& j_;
    std::string path_;
};

inline constexpr std::pair<std::string_view, SetKind> kSetKinds[] = {
    {"clique", SetKind::Clique}, {"independent", SetKind::Independent}, {"dominating", SetKind::Dominating}};
inline constexpr std::pair<std::string_view, BookDiscipline> kDisciplines[] = {
    {"stack", BookDiscipline::Stack}, {"queue", BookDiscipline::Queue}};
inline constexpr std::pair<std::string_view, MarkClass> kMarkClasses[] = {
    {"evidence", MarkClass::Evidence}, {"block_boundary", MarkClass::BlockBoundary}};
inline constexpr std::pair<std::string_view, BlockExpect> kBlockExpects[] = {
    {"empty", BlockExpect::Empty}, {"filled", BlockExpect::Filled}, {"dominating", BlockExpect::Dominating}};

inline Evidence read_evidence(const Reader& r) {
    const std::string tag = r.at("tag").string();
    if (tag == "span_tree") return SpanTree{r.at("root").integer(), r.at("parent").ints(), r.at("depth").ints()};
    if (tag == "partition") return Partition{r.at("a").ints(), r.at("b").ints()};
    if (tag == "vertex_cut") return VertexCut{r.at("cut").ints(), r.at("a").ints(), r.at("b").ints()};
    if (tag == "cycle") return Cycle{r.at("vertices").ints()};
    if (tag == "coloring") return Coloring{r.at("k").integer(), r.at("colors").ints()};
    if (tag == "missing_edge") return MissingEdge{r.at("u").integer(), r.at("v").integer()};
    if (tag == "complete") return CompleteWitness{};
    if (tag == "witness_set") return WitnessSet{r.at("kind").choice(kSetKinds), r.at("vertices").ints()};
    if (tag == "bfs") {
        BfsWitness w{r.at("root").integer(), r.at("depth").ints(), r.at("parent").ints(), r.at("path").ints()};
        if (w.path.empty()) r.at("path").fail("path must not be empty");
        return w;
    }
    if (tag == "sparse_subgraph") return SparseSubgraph{r.at("k").integer(), r.at("edges").edges()};
    if (tag == "book_embedding") {
        return BookEmbedding{r.at("k").integer(), r.at("discipline").choice(kDisciplines), r.at("order").ints(),
                             r.at("pages").paged()};
    }
    r.at("tag").fail("unknown evidence tag \"" + tag + "\"");
}

inline Layout read_layout(const Reader& r) {
    const std::string style = r.at("style").string();
    if (style == "nodelink") {
        NodeLinkLayout l;
        l.kind = r.at("kind").string();
        for (const auto& p : r.at("positions").items()) l.positions.push_back(p.point());
        l.edges = r.at("edges").edges();
        l.highlight_vertices = r.at("highlight_vertices").ints();
        l.highlight_edges = r.at("highlight_edges").edges();
        for (const auto& a : r.at("annotations").items()) l.annotations.push_back({a.at("label").string(), a.at("at").point()});
        return l;
    }
    if (style == "matrix") {
        MatrixLayout l;
        l.order = r.at("order").ints();
        l.widths = r.at("widths").ints();
        l.edges = r.at("edges").edges();
        for (const auto& m : r.at("marks").items()) {
            l.marks.push_back({m.at("row").integer(), m.at("col").integer(), m.at("class").choice(kMarkClasses)});
        }
        for (const auto& b : r.at("blocks").items()) {
            l.blocks.push_back({b.at("begin").integer(), b.at("end").integer(), b.at("expect").choice(kBlockExpects)});
        }
        return l;
    }
    if (style == "book") {
        return BookLayout{r.at("k").integer(), r.at("discipline").choice(kDisciplines), r.at("order").ints(),
                          r.at("edges").paged()};
    }
    r.at("style").fail("unknown layout style \"" + style + "\"");
}

inline Graph read_graph(const Reader& r) {
    try {
        return Graph(r.at("n").integer(), r.at("edges").edges());
    } catch (const std::invalid_argument& e) {
        r.fail(std::string("invalid graph: ") + e.what());
    }
}

inline Assertion read_assertion(const Reader& r, const Graph& g) {
    const std::string name = r.at("kind").string();
    auto kind = assertion_kind_from_string(name);
    if (!kind) r.at("kind").fail("unknown assertion \"" + name + "\"");
    Assertion a{*kind, r.at("k").integer(), r.at("u").integer(), r.at("v").integer()};
    try {
        validate(a, g);
    } catch (const std::invalid_argument& e) {
        r.fail(e.what());
    }
    return a;
}

}  // namespace detail

inline CertificateDocument from_json(const Json& j) {
    detail::Reader root(j);
    if (!j.is_object()) root.fail("expected an object");
    if (root.at("version").integer() != kDocumentVersion) root.at("version").fail("unsupported version");
    CertificateDocument doc;
    Certificate& c = doc.certificate;
    c.graph = detail::read_graph(root.at("graph"));
    c.assertion = detail::read_assertion(root.at("assertion"), c.graph);
    c.evidence = detail::read_evidence(root.at("evidence"));
    c.layout = detail::read_layout(root.at("layout"));
    if (root.has("note")) doc.note = root.at("note").string();
    return doc;
}

/// Parses a certificate document. Throws SchemaError on malformed input.
inline CertificateDocument read_certificate(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return from_json(j);
}

/// Standalone evidence record, as accepted by `prove -e`.
inline Evidence read_evidence_document(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    detail::Reader r(j);
    return detail::read_evidence(r.has("evidence") ? r.at("evidence") : r);
}

inline std::string write_evidence(const Evidence& ev) { return dump_json(detail::evidence_json(ev)); }

// ---------------------------------------------------------------------------
// Reports

inline Json violations_json(const Violations& vs) {
    Json list = Json::array();
    for (const auto& v : vs) list.push_back({{"code", v.code}, {"detail", v.detail}});
    return {{"ok", vs.empty()}, {"violations", list}};
}

inline Json verdict_json(const Verdict& v, const MentalModel* model = nullptr) {
    Json j{{"convinced", v.convinced},
           {"observations", v.observations},
           {"class", v.complexity_class},
           {"reasons", v.reasons}};
    if (model) {
        Json tokens = Json::array();
        for (const Gist& g : model->components) tokens.push_back(to_string(g));
        j["gist"] = tokens;
    }
    return j;
}

inline Json metrics_json(const MetricsReport& r) {
    auto value = [](const std::optional<double>& v, double unit) -> Json {
        if (!v) return "N/A";
        return std::round(*v / unit) * unit;
    };
    return {{"scope", std::string(to_string(r.scope))},
            {"st", value(r.st, 1e-6)},
            {"cn", r.cn},
            {"ji", value(r.ji, 1e-6)},
            {"el", value(r.el, 1e-6)},
            {"nr", value(r.nr, 1e-6)},
            {"ar", value(r.ar, 1e-6)},
            {"cr", value(r.cr, 1e-2)},
            {"an", value(r.an, 1e-2)}};
}

}  // namespace graphtrials
