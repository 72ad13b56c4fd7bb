#include "pfaffian_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pfaffian/apps.hpp"
#include "pfaffian/errors.hpp"
#include "pfaffian/oracle.hpp"
#include "pfaffian/orient.hpp"
#include "pfaffian/text_io.hpp"

namespace pfaffian::cli {

namespace {

using nlohmann::json;

// Witnesses of digraphs up to this many vertices are checked circuit by circuit.
constexpr int kWitnessCheckVertices = 12;

struct Config {
    bool verify = false;
    int oracle_limit = 24;
    int brute_limit = 20;
    std::string format = "text";

    oracle::Limits limits() const {
        oracle::Limits l;
        l.matrix_order = oracle_limit;
        l.cyclomatic = brute_limit;
        return l;
    }
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Owns the file stream when the input is not stdin.
class Input {
public:
    Input(const std::string &path, std::istream &stdin_stream) {
        if (path == "-") {
            stream_ = &stdin_stream;
            return;
        }
        file_.open(path);
        if (!file_) throw InputError("cannot open " + path);
        stream_ = &file_;
    }
    std::istream &get() { return *stream_; }

private:
    std::ifstream file_;
    std::istream *stream_ = nullptr;
};

json edge_json(const Edge &e) { return json::array({e.a + 1, e.b + 1}); }

json one_based(const std::vector<int> &v) {
    json out = json::array();
    for (int x : v) out.push_back(x + 1);
    return out;
}

json to_json(const DecompositionTree &t) {
    json node;
    node["kind"] = to_string(t.kind);
    node["a"] = one_based(t.a_vertices);
    node["b"] = one_based(t.b_vertices);
    node["edges"] = t.edge_count;
    switch (t.kind) {
    case NodeKind::Pruned: {
        json removed = json::array();
        for (const Edge &e : t.removed_edges) removed.push_back(edge_json(e));
        node["removed"] = std::move(removed);
        break;
    }
    case NodeKind::TwoSum: node["sum_edge"] = edge_json(*t.sum_edge); break;
    case NodeKind::Trisum:
        node["trisector"] = {{"a", one_based({t.trisector->a[0], t.trisector->a[1]})},
                             {"b", one_based({t.trisector->b[0], t.trisector->b[1]})}};
        node["trisectors"] = t.trisector_count;
        break;
    case NodeKind::Leaf:
        node["leaf"] = to_string(t.leaf);
        if (t.leaf == LeafKind::Rejected) node["reason"] = to_string(t.reason);
        if (t.leaf != LeafKind::NoPerfectMatching) node["trisectors"] = t.trisector_count;
        break;
    case NodeKind::Components: break;
    }
    if (!t.children.empty()) {
        json children = json::array();
        for (const auto &c : t.children) children.push_back(to_json(c));
        node["children"] = std::move(children);
    }
    return node;
}

json verdict_json(const PfaffianVerdict &v) {
    json out;
    out["pfaffian"] = v.yes();
    if (!v.yes()) {
        out["reason"] = to_string(v.reason);
        out["failed_path"] = v.failed_path;
    }
    return out;
}

int cmd_pfaffian(const BipartiteGraph &g, const Config &cfg, std::ostream &out, std::ostream &err) {
    PfaffianVerdict v = pfaffian_orientation(g);
    if (!v.yes()) {
        if (cfg.verify && oracle::cyclomatic_number(g) <= cfg.brute_limit) {
            if (oracle::pfaffian_exists_bruteforce(g, cfg.limits())) {
                err << "verification failed: a Pfaffian orientation exists\n";
                return kVerificationFailed;
            }
        }
        if (cfg.format == "json") {
            out << verdict_json(v).dump(2) << '\n';
        } else {
            out << "NONE: " << to_string(v.reason) << '\n';
        }
        return kNo;
    }
    const Orientation &d = *v.orientation;
    if (cfg.verify && g.balanced() && g.n_a() <= cfg.oracle_limit &&
        !oracle::is_pfaffian_orientation(g, d, cfg.limits())) {
        err << "verification failed: per(A) != |det(B)|\n";
        return kVerificationFailed;
    }
    if (cfg.format == "json") {
        json o = verdict_json(v);
        json edges = json::array();
        for (int i = 0; i < g.edge_count(); ++i) {
            edges.push_back({g.edge(i).a + 1, g.edge(i).b + 1, d[i] == Direction::AtoB ? ">" : "<"});
        }
        o["orientation"] = std::move(edges);
        out << o.dump(2) << '\n';
    } else if (cfg.format == "dot") {
        text::write_dot(out, g, d);
    } else {
        text::write_orientation(out, g, d);
    }
    return kYes;
}

int cmd_polya(const std::vector<std::vector<int>> &rows, const Config &cfg, std::ostream &out) {
    ZeroOneMatrix a(rows);
    std::optional<SignMatrix> b = polya_matrix(a, cfg.limits());
    if (!b) {
        PfaffianVerdict v = pfaffian_orientation(graph_of_matrix(a));
        if (cfg.format == "json") {
            out << verdict_json(v).dump(2) << '\n';
        } else {
            out << "NONE: " << to_string(v.reason) << '\n';
        }
        return kNo;
    }
    if (cfg.format == "json") {
        json m = json::array();
        for (int r = 0; r < b->order(); ++r) {
            json row = json::array();
            for (int c = 0; c < b->order(); ++c) row.push_back((*b)(r, c));
            m.push_back(std::move(row));
        }
        out << json{{"polya", std::move(m)}}.dump(2) << '\n';
    } else {
        text::write_matrix(out, *b);
    }
    return kYes;
}

int cmd_even(const Digraph &d, const Config &cfg, std::ostream &out, std::ostream &err) {
    EvennessVerdict v = is_even_digraph(d);
    if (!v.even && cfg.verify && d.vertex_count() <= kWitnessCheckVertices &&
        !oracle::every_circuit_odd(d, *v.witness)) {
        err << "verification failed: witness leaves an even circuit\n";
        return kVerificationFailed;
    }
    if (cfg.format == "json") {
        json o;
        o["even"] = v.even;
        if (!v.even) {
            json w = json::array();
            for (int i = 0; i < d.arc_count(); ++i)
                w.push_back({d.arc(i).tail + 1, d.arc(i).head + 1, v.witness->weight[i]});
            o["witness"] = std::move(w);
        }
        out << o.dump(2) << '\n';
    } else if (v.even) {
        out << "EVEN\n";
    } else {
        out << "NOT-EVEN\n";
        for (int i = 0; i < d.arc_count(); ++i) {
            out << "w " << d.arc(i).tail + 1 << ' ' << d.arc(i).head + 1 << ' '
                << static_cast<int>(v.witness->weight[i]) << '\n';
        }
    }
    return v.even ? kYes : kNo;
}

int cmd_sns(const std::vector<std::vector<int>> &rows, const Config &cfg, std::ostream &out) {
    bool sns = sign_nonsingular(SignMatrix(rows), cfg.limits());
    if (cfg.format == "json") {
        out << json{{"sns", sns}}.dump(2) << '\n';
    } else {
        out << (sns ? "SNS" : "NOT-SNS") << '\n';
    }
    return sns ? kYes : kNo;
}

int cmd_verify(const BipartiteGraph &g, const Orientation &d, const Config &cfg, std::ostream &out) {
    bool ok = oracle::is_pfaffian_orientation(g, d, cfg.limits());
    if (cfg.format == "json") {
        out << json{{"pfaffian", ok}}.dump(2) << '\n';
    } else {
        out << (ok ? "PFAFFIAN" : "NOT-PFAFFIAN") << '\n';
    }
    return ok ? kYes : kNo;
}

int cmd_decompose(const BipartiteGraph &g, std::ostream &out) {
    PfaffianVerdict v = pfaffian_orientation(g);
    json o = verdict_json(v);
    o["tree"] = to_json(v.tree);
    out << o.dump(2) << '\n';
    return kYes;
}

}  // namespace

std::string tree_json(const DecompositionTree &tree, int indent) { return to_json(tree).dump(indent); }

int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
    Config cfg;
    CLI::App app{"Pfaffian orientations of bipartite graphs", "pfaffian"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--verify", cfg.verify, "Check outputs with the exact oracle when feasible");
    app.add_option("--oracle-limit", cfg.oracle_limit, "Largest matrix order for exact checks")
        ->check(CLI::PositiveNumber);
    app.add_option("--brute-limit", cfg.brute_limit, "Largest cyclomatic number for the existence search")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "dot", "json"}));

    std::string path, orientation_path;
    auto *pf = app.add_subcommand("pfaffian", "Find a Pfaffian orientation of a graph");
    pf->add_option("graph", path, "Graph file")->required();
    auto *po = app.add_subcommand("polya", "Sign a 0-1 matrix so that det equals per");
    po->add_option("matrix", path, "Matrix file")->required();
    auto *ev = app.add_subcommand("even", "Decide whether a digraph is even");
    ev->add_option("digraph", path, "Digraph file")->required();
    auto *sn = app.add_subcommand("sns", "Decide whether a sign pattern is sign-nonsingular");
    sn->add_option("matrix", path, "Sign matrix file")->required();
    auto *ve = app.add_subcommand("verify", "Check an orientation with the exact oracle");
    ve->add_option("graph", path, "Graph file")->required();
    ve->add_option("orientation", orientation_path, "Orientation file")->required();
    auto *de = app.add_subcommand("decompose", "Print the decomposition tree as JSON");
    de->add_option("graph", path, "Graph file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kYes : kParseError;
    }

    try {
        Input input(path, in);
        if (pf->parsed()) return cmd_pfaffian(text::parse_graph(input.get()), cfg, out, err);
        if (po->parsed()) return cmd_polya(text::parse_matrix(input.get()), cfg, out);
        if (ev->parsed()) return cmd_even(text::parse_digraph(input.get()), cfg, out, err);
        if (sn->parsed()) return cmd_sns(text::parse_matrix(input.get()), cfg, out);
        if (de->parsed()) return cmd_decompose(text::parse_graph(input.get()), out);
        BipartiteGraph g = text::parse_graph(input.get());
        Input orientation_input(orientation_path, in);
        return cmd_verify(g, text::parse_orientation(orientation_input.get(), g), cfg, out);
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const PreconditionError &e) {
        err << "invalid input: " << e.what() << '\n';
        return kParseError;
    } catch (const SizeLimitError &e) {
        err << "limit exceeded: " << e.what() << '\n';
        return kLimitExceeded;
    }
}

}  // namespace pfaffian::cli
