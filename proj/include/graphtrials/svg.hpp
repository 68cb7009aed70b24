#pragma once

// Deterministic SVG rendering of certificates. Base elements are mid-gray,
// highlighted elements are drawn afterwards in the highlight colour.

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>

#include "graphtrials/layout.hpp"
#include "graphtrials/verify.hpp"

namespace graphtrials {

struct SvgOptions {
    std::string highlight = "#D62728";
    std::string base = "#808080";
    double drawing_size = 400;  // px of the longer bounding-box side
    double margin = 30;
    double vertex_radius = 5;
    double cell = 12;  // px per matrix width unit
    double spine_step = 40;
};

namespace detail {

class SvgWriter {
public:
    static std::string num(double v) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        std::string s = buf;
        return s == "-0.00" ? "0.00" : s;
    }

    void open(double width, double height) {
        out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(height) +
                "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
        out_ += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) + "\" fill=\"#FFFFFF\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke, double width) {
        out_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) +
                "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) + "\"/>\n";
    }

    void circle(double x, double y, double r, const std::string& fill, const std::string& stroke, double width) {
        out_ += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"" + num(r) + "\" fill=\"" + fill + "\" stroke=\"" +
                stroke + "\" stroke-width=\"" + num(width) + "\"/>\n";
    }

    void rect(double x, double y, double w, double h, const std::string& fill, const std::string& stroke, double width,
              bool dashed = false) {
        out_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" + num(h) +
                "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) + "\"" +
                (dashed ? " stroke-dasharray=\"4 2\"" : "") + "/>\n";
    }

    void arc(double x1, double x2, double y, const std::string& stroke, double width) {
        const double r = std::abs(x2 - x1) / 2;
        out_ += "<path d=\"M " + num(x1) + " " + num(y) + " A " + num(r) + " " + num(r) + " 0 0 1 " + num(x2) + " " +
                num(y) + "\" fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" + num(width) + "\"/>\n";
    }

    void text(double x, double y, const std::string& s, double size = 10, const char* anchor = "middle") {
        out_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"" + num(size) +
                "\" text-anchor=\"" + anchor + "\">" + escape(s) + "</text>\n";
    }

    void raw(const std::string& s) { out_ += s; }

    std::string finish() {
        out_ += "</svg>\n";
        return std::move(out_);
    }

private:
    static std::string escape(const std::string& s) {
        std::string out;
        for (char c : s) {
            switch (c) {
                case '&': out += "&amp;"; break;
                case '<': out += "&lt;"; break;
                case '>': out += "&gt;"; break;
                case '"': out += "&quot;"; break;
                default: out += c;
            }
        }
        return out;
    }

    std::string out_;
};

inline std::string render_nodelink(const NodeLinkLayout& l, const SvgOptions& o) {
    auto box = bounding_box(l.positions);
    const double longer = std::max({box.width(), box.height(), 1e-9});
    const double scale = l.positions.size() > 1 ? o.drawing_size / longer : 1.0;
    auto px = [&](Point p) { return o.margin + (p.x - box.min_x) * scale; };
    auto py = [&](Point p) { return o.margin + (box.max_y - p.y) * scale; };
    SvgWriter w;
    w.open(2 * o.margin + box.width() * scale, 2 * o.margin + box.height() * scale);
    const int n = static_cast<int>(l.positions.size());
    auto drawable = [&](const Edge& e) { return e.u >= 0 && e.v < n; };

    w.raw("<g id=\"edges\">\n");
    for (const Edge& e : l.edges) {
        if (drawable(e)) w.line(px(l.positions[e.u]), py(l.positions[e.u]), px(l.positions[e.v]), py(l.positions[e.v]), o.base, 1);
    }
    w.raw("</g>\n<g id=\"highlight-edges\">\n");
    for (const Edge& e : l.highlight_edges) {
        if (drawable(e)) {
            w.line(px(l.positions[e.u]), py(l.positions[e.u]), px(l.positions[e.v]), py(l.positions[e.v]), o.highlight, 3);
        }
    }
    w.raw("</g>\n<g id=\"vertices\">\n");
    std::set<Vertex> hot(l.highlight_vertices.begin(), l.highlight_vertices.end());
    for (Vertex v = 0; v < n; ++v) {
        Point p = l.positions[v];
        if (hot.contains(v)) w.circle(px(p), py(p), o.vertex_radius, o.highlight, o.highlight, 3);
        else w.circle(px(p), py(p), o.vertex_radius, "#FFFFFF", o.base, 1);
    }
    w.raw("</g>\n<g id=\"labels\">\n");
    for (Vertex v = 0; v < n; ++v) {
        Point p = l.positions[v];
        w.text(px(p) + o.vertex_radius + 2, py(p) - o.vertex_radius - 2, std::to_string(v), 10, "start");
    }
    for (const auto& a : l.annotations) w.text(px(a.at) - o.vertex_radius - 2, py(a.at) + 3, a.label, 9, "end");
    w.raw("</g>\n");
    return w.finish();
}

inline std::string render_matrix(const MatrixLayout& l, const Graph& g, const SvgOptions& o) {
    const int n = static_cast<int>(l.order.size());
    std::vector<double> offset(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        int width = i < static_cast<int>(l.widths.size()) ? std::max(1, l.widths[i]) : 1;
        offset[i + 1] = offset[i] + width * o.cell;
    }
    const double size = offset[n];
    SvgWriter w;
    w.open(2 * o.margin + size, 2 * o.margin + size);
    auto x = [&](int i) { return o.margin + offset[i]; };
    auto span = [&](int i) { return offset[i + 1] - offset[i]; };
    std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
    for (int i = 0; i < n; ++i) {
        if (l.order[i] >= 0 && l.order[i] < g.n()) index[l.order[i]] = i;
    }

    w.raw("<g id=\"cells\">\n");
    for (const Edge& e : l.edges) {
        if (e.u < 0 || e.v >= g.n() || index[e.u] < 0 || index[e.v] < 0) continue;
        int i = index[e.u], j = index[e.v];
        w.rect(x(j), x(i), span(j), span(i), o.base, "none", 0);
        w.rect(x(i), x(j), span(i), span(j), o.base, "none", 0);
    }
    w.raw("</g>\n<g id=\"marks\">\n");
    for (const CellMark& m : l.marks) {
        if (m.row < 0 || m.col < 0 || m.row >= n || m.col >= n) continue;
        for (auto [r, c] : {std::pair{m.row, m.col}, std::pair{m.col, m.row}}) {
            if (m.cls == MarkClass::Evidence) w.rect(x(c), x(r), span(c), span(r), o.highlight, "none", 0);
            else w.rect(x(c) + 1, x(r) + 1, span(c) - 2, span(r) - 2, "none", o.highlight, 2);
        }
    }
    w.raw("</g>\n<g id=\"grid\">\n");
    w.rect(o.margin, o.margin, size, size, "none", o.base, 1);
    for (int i = 1; i < n; ++i) {
        w.line(x(i), o.margin, x(i), o.margin + size, "#E0E0E0", 0.5);
        w.line(o.margin, x(i), o.margin + size, x(i), "#E0E0E0", 0.5);
    }
    w.raw("</g>\n<g id=\"blocks\">\n");
    for (const MatrixBlock& b : l.blocks) {
        if (b.begin < 0 || b.end > n || b.begin >= b.end) continue;
        w.rect(x(b.begin), x(b.begin), offset[b.end] - offset[b.begin], offset[b.end] - offset[b.begin], "none",
               o.highlight, 2, true);
    }
    w.raw("</g>\n<g id=\"labels\">\n");
    for (int i = 0; i < n; ++i) {
        w.text(x(i) + span(i) / 2, o.margin - 6, std::to_string(l.order[i]), 9);
        w.text(o.margin - 6, x(i) + span(i) / 2 + 3, std::to_string(l.order[i]), 9, "end");
    }
    w.raw("</g>\n");
    return w.finish();
}

inline std::string render_book(const BookLayout& l, const SvgOptions& o) {
    const int n = static_cast<int>(l.order.size());
    const int pages = std::max(1, l.k);
    const double spine = std::max(1, n - 1) * o.spine_step;
    const double panel = spine / 2 + 2 * o.margin;
    SvgWriter w;
    w.open(2 * o.margin + spine, pages * panel);
    std::vector<int> pos(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        if (l.order[i] >= 0 && l.order[i] < n) pos[l.order[i]] = i;
    }
    auto x = [&](int i) { return o.margin + i * o.spine_step; };
    for (int p = 0; p < pages; ++p) {
        const double base_y = (p + 1) * panel - o.margin;
        w.raw("<g id=\"page-" + std::to_string(p) + "\">\n");
        w.text(o.margin, p * panel + 14, "page " + std::to_string(p), 10, "start");
        w.line(x(0), base_y, x(std::max(0, n - 1)), base_y, o.base, 1);
        for (const PagedEdge& e : l.edges) {
            if (e.page != p || e.edge.u < 0 || e.edge.v >= n) continue;
            int a = std::min(pos[e.edge.u], pos[e.edge.v]), b = std::max(pos[e.edge.u], pos[e.edge.v]);
            w.arc(x(a), x(b), base_y, o.highlight, 3);
        }
        for (int i = 0; i < n; ++i) {
            w.circle(x(i), base_y, o.vertex_radius, "#FFFFFF", o.base, 1);
            w.text(x(i), base_y + 16, std::to_string(l.order[i]), 10);
        }
        w.raw("</g>\n");
    }
    return w.finish();
}

}  // namespace detail

inline std::string render_svg(const Certificate& c, const SvgOptions& o = {}) {
    return std::visit(
        [&](const auto& l) {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, NodeLinkLayout>) return detail::render_nodelink(l, o);
            else if constexpr (std::is_same_v<L, MatrixLayout>) return detail::render_matrix(l, c.graph, o);
            else return detail::render_book(l, o);
        },
        c.layout);
}

}  // namespace graphtrials
