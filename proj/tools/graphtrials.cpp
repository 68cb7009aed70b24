// graphtrials: prove, verify, judge, measure and render visual certificates.
//
// Exit codes
//   0  success
//   1  certificate rejected (violations, or the judge is not convinced)
//   2  assertion not provable on this graph
//   3  search budget exceeded
//   4  unreadable input (graph, certificate or evidence)
//   5  judge refused an unverified certificate
//   6  metrics requested for a non node-link certificate

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "graphtrials/graphtrials.hpp"

namespace gt = graphtrials;

namespace {

enum Exit {
    kOk = 0,
    kRejected = 1,
    kNotProvable = 2,
    kBudget = 3,
    kBadInput = 4,
    kRefused = 5,
    kNotNodeLink = 6,
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << text;
}

gt::CertificateDocument load_certificate(const std::string& path) { return gt::read_certificate(read_file(path)); }

struct ProveArgs {
    std::string graph_path, assertion, style, evidence_path, out_path, svg_path, note;
    int k = 0, u = 0, v = 0;
};

int cmd_prove(const ProveArgs& args) {
    gt::Graph g = gt::parse_graph(read_file(args.graph_path));
    auto kind = gt::assertion_kind_from_string(args.assertion);
    if (!kind) throw InputError("unknown assertion " + args.assertion);
    gt::Assertion a{*kind, args.k, args.u, args.v};
    try {
        gt::validate(a, g);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    std::optional<gt::LayoutStyle> style;
    if (!args.style.empty()) {
        for (auto s : {gt::LayoutStyle::NodeLink, gt::LayoutStyle::Matrix, gt::LayoutStyle::Book}) {
            if (gt::to_string(s) == args.style) style = s;
        }
        auto allowed = gt::supported_styles(a.kind);
        if (!style || std::find(allowed.begin(), allowed.end(), *style) == allowed.end()) {
            throw InputError("style " + args.style + " has no certificate for " + args.assertion);
        }
    }

    gt::ProveResult result;
    try {
        if (!args.evidence_path.empty()) {
            result = gt::certify(g, a, gt::read_evidence_document(read_file(args.evidence_path)), style);
        } else {
            result = gt::prove(g, a, style);
        }
    } catch (const std::invalid_argument& e) {
        // supplied evidence that cannot even be drawn
        std::cerr << "certificate construction failed: " << e.what() << "\n";
        return kRejected;
    }
    if (!result.ok()) {
        std::cerr << "self-check failed\n";
        for (const auto& v : result.violations) std::cerr << "  " << v.code << " " << v.detail << "\n";
        for (const auto& r : result.verdict.reasons) std::cerr << "  " << r << "\n";
        return kRejected;
    }
    gt::CertificateDocument doc{result.certificate, args.note};
    const std::string json = gt::write_certificate(doc);
    if (args.out_path.empty()) std::cout << json;
    else write_file(args.out_path, json);
    if (!args.svg_path.empty()) write_file(args.svg_path, gt::render_svg(doc.certificate));
    return kOk;
}

int cmd_verify(const std::string& path) {
    auto doc = load_certificate(path);
    auto violations = gt::verify(doc.certificate);
    std::cout << gt::dump_json(gt::violations_json(violations));
    return violations.empty() ? kOk : kRejected;
}

int cmd_judge(const std::string& path) {
    auto doc = load_certificate(path);
    auto violations = gt::verify(doc.certificate);
    if (!violations.empty()) {
        std::cout << gt::dump_json({{"refused", true}, {"reason", "certificate did not pass verification"},
                                    {"violations", gt::violations_json(violations)["violations"]}});
        return kRefused;
    }
    gt::MentalModel model;
    try {
        model = gt::extract_mental_model(doc.certificate.layout);
    } catch (const gt::UnrecognizedGist& e) {
        gt::Verdict v;
        v.complexity_class = std::string(gt::complexity_class(doc.certificate.assertion));
        v.reasons.push_back("gist_unrecognized");
        std::cout << gt::dump_json(gt::verdict_json(v));
        return kRejected;
    }
    auto verdict = gt::judge(doc.certificate.assertion, model);
    std::cout << gt::dump_json(gt::verdict_json(verdict, &model));
    return verdict.convinced ? kOk : kRejected;
}

int cmd_metrics(const std::string& path, bool highlighted_only) {
    auto doc = load_certificate(path);
    const auto* layout = std::get_if<gt::NodeLinkLayout>(&doc.certificate.layout);
    if (!layout) {
        std::cerr << "metrics are defined for node-link drawings only; this certificate is a "
                  << gt::to_string(gt::style_of(doc.certificate.layout)) << " layout\n";
        return kNotNodeLink;
    }
    const bool has_highlight = !layout->highlight_vertices.empty() || !layout->highlight_edges.empty();
    if (highlighted_only && !has_highlight) {
        std::cerr << "certificate has no highlighted subgraph\n";
        return kBadInput;
    }
    std::vector<gt::MetricsReport> reports;
    if (!highlighted_only) reports.push_back(gt::compute_metrics(*layout, doc.certificate.graph, gt::MetricScope::Full));
    if (has_highlight) reports.push_back(gt::compute_metrics(*layout, doc.certificate.graph, gt::MetricScope::Highlighted));
    std::cout << gt::metrics_table(reports) << "\n";
    gt::Json j = gt::Json::array();
    for (const auto& r : reports) j.push_back(gt::metrics_json(r));
    std::cout << gt::dump_json(j);
    return kOk;
}

int cmd_render(const std::string& path, const std::string& out, const std::string& color) {
    auto doc = load_certificate(path);
    gt::SvgOptions options;
    if (!color.empty()) options.highlight = color;
    const std::string svg = gt::render_svg(doc.certificate, options);
    if (out.empty()) std::cout << svg;
    else write_file(out, svg);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Visual certificates for graph assertions"};
    app.require_subcommand(1);

    ProveArgs prove;
    auto* p = app.add_subcommand("prove", "find evidence, draw and self-check a certificate");
    p->add_option("-i,--input", prove.graph_path, "graph edge list")->required();
    p->add_option("-a,--assertion", prove.assertion, "assertion kind")->required();
    p->add_option("--k", prove.k, "assertion parameter k");
    p->add_option("--u", prove.u, "first vertex of a pair");
    p->add_option("--v", prove.v, "second vertex of a pair");
    p->add_option("--style", prove.style, "nodelink | matrix | book");
    p->add_option("-e,--evidence", prove.evidence_path, "use this evidence instead of searching");
    p->add_option("-o,--output", prove.out_path, "certificate JSON (stdout if absent)");
    p->add_option("--svg", prove.svg_path, "also render the certificate");
    p->add_option("--note", prove.note, "provenance note stored in the document");

    std::string cert_path, out_path, color;
    bool highlighted_only = false;
    auto* v = app.add_subcommand("verify", "check faithfulness and evidence validity");
    v->add_option("certificate", cert_path)->required();
    auto* j = app.add_subcommand("judge", "validate the assertion from the drawing's gist");
    j->add_option("certificate", cert_path)->required();
    auto* m = app.add_subcommand("metrics", "aesthetic metrics of a node-link certificate");
    m->add_option("certificate", cert_path)->required();
    m->add_flag("--highlighted", highlighted_only, "only the highlighted subgraph");
    auto* r = app.add_subcommand("render", "write the certificate as SVG");
    r->add_option("certificate", cert_path)->required();
    r->add_option("-o,--output", out_path, "SVG file (stdout if absent)");
    r->add_option("--highlight-color", color, "highlight colour");

    CLI11_PARSE(app, argc, argv);

    try {
        if (p->parsed()) return cmd_prove(prove);
        if (v->parsed()) return cmd_verify(cert_path);
        if (j->parsed()) return cmd_judge(cert_path);
        if (m->parsed()) return cmd_metrics(cert_path, highlighted_only);
        if (r->parsed()) return cmd_render(cert_path, out_path, color);
    } catch (const gt::NoEvidence& e) {
        std::cerr << "assertion not provable on this graph (" << e.what() << ")\n";
        return kNotProvable;
    } catch (const gt::SearchBudgetExceeded& e) {
        std::cerr << e.what() << "\n";
        return kBudget;
    } catch (const gt::ParseError& e) {
        std::cerr << "graph: " << e.what() << "\n";
        return kBadInput;
    } catch (const gt::SchemaError& e) {
        std::cerr << "certificate: " << e.what() << "\n";
        return kBadInput;
    } catch (const InputError& e) {
        std::cerr << e.what() << "\n";
        return kBadInput;
    }
    return kOk;
}
