#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sgf/fra.hpp"
#include "sgf/io.hpp"
#include "sgf/oracle.hpp"
#include "sgf/sweep.hpp"

namespace {

using sgf::Json;

// Exit statuses: 0 success, 1 invalid input, 2 guard violation, 3 internal
// invariant (a structural assertion fired; a bug, not a user error).
constexpr int kOk = 0, kInvalidInput = 1, kGuard = 2, kInvariant = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sgf::ParseError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw sgf::ParseError("cannot open '" + out_path + "' for writing");
    out << payload;
}

Json report_header(const std::string& command, const std::string& path,
                   const std::string& bytes) {
    return Json{{"command", command},
                {"input", {{"path", path}, {"digest", sgf::fnv1a_hex(bytes)}}}};
}

int cmd_check(const std::string& path, const std::string& out_path) {
    std::string bytes = read_file(path);
    Json report = report_header("check", path, bytes);
    int status = kOk;
    try {
        sgf::InputDocument doc = sgf::parse_document(bytes);
        auto violations = sgf::validate_graph(doc.spec);
        if (!violations.empty()) {
            report["graph"] = {{"ok", false}, {"violations", violations}};
            status = kInvalidInput;
        } else {
            sgf::LoadedInput in = sgf::load_input(doc);
            report["graph"] = {{"ok", true},
                               {"vertices", in.graph.vertex_count()},
                               {"edges", in.graph.edge_count()}};
            report["orientation"] = {{"ok", true},
                                     {"provided", doc.orientation.has_value()}};
            if (in.flow) {
                auto charge = sgf::boundary(in.graph, *in.flow, in.eps);
                Json bad = Json::array();
                for (int v = 0; v < in.graph.vertex_count(); ++v)
                    if (charge[v] != 0)
                        bad.push_back({{"vertex", in.graph.vertex_id(v)},
                                       {"charge", charge[v]}});
                bool ok = bad.empty();
                report["flow"] = {{"present", true},
                                  {"conservative", ok},
                                  {"violations", std::move(bad)}};
                if (!ok) status = kInvalidInput;
            } else {
                report["flow"] = {{"present", false}};
            }
        }
    } catch (const sgf::ParseError& e) {
        report["error"] = e.what();
        status = kInvalidInput;
    }
    report["status"] = status;
    write_output(out_path, report.dump(2));
    return status;
}

sgf::LoadedInput load_or_throw(const std::string& bytes) {
    return sgf::load_input(sgf::parse_document(bytes));
}

int cmd_decompose(const std::string& path, bool trace,
                  const std::string& format, const std::string& out_path) {
    std::string bytes = read_file(path);
    sgf::LoadedInput in = load_or_throw(bytes);
    if (!in.flow) throw sgf::ParseError("decompose requires a 'flow' field");
    if (!sgf::is_flow(in.graph, *in.flow, in.eps)) {
        auto charge = sgf::boundary(in.graph, *in.flow, in.eps);
        for (int v = 0; v < in.graph.vertex_count(); ++v)
            if (charge[v] != 0)
                throw sgf::ParseError("flow is not conservative at vertex '" +
                                      in.graph.vertex_id(v) + "' (charge " +
                                      std::to_string(charge[v]) + ")");
    }

    sgf::FraTrace tr;
    sgf::Decomposition dec =
        sgf::decompose_flow(in.graph, *in.flow, in.eps, trace ? &tr : nullptr);

    if (format == "dot") {
        // Terms are drawn under eps_f, the orientation their walks follow.
        auto epsf = sgf::derived_orientation(in.graph, *in.flow, in.eps);
        std::string dots;
        for (size_t i = 0; i < dec.terms.size(); ++i)
            dots += sgf::to_dot(in.graph, "term_" + std::to_string(i), &epsf,
                                &dec.terms[i].tree);
        write_output(out_path, dots);
        return kOk;
    }

    Json report = report_header("decompose", path, bytes);
    report["flow"] = sgf::flow_to_json(in.graph, *in.flow);
    if (sgf::is_trivial(*in.flow)) {
        report["notice"] = "trivial flow: empty decomposition";
    } else {
        auto ind = sgf::is_indecomposable(in.graph, *in.flow, in.eps);
        report["indecomposable"] = ind.indecomposable;
        if (!ind.indecomposable) report["decomposable_because"] = ind.reason;
    }
    Json terms = Json::array();
    for (const auto& term : dec.terms) {
        Json jt{{"flow", sgf::flow_to_json(in.graph, term.flow)},
                {"walk", sgf::walk_to_json(in.graph, term.walk)},
                {"cycle_tree", sgf::tree_to_json(in.graph, term.tree)},
                {"circuit", sgf::circuit_to_json(in.graph, term.tree,
                                                 term.circuit)}};
        if (term.circuit.kind == sgf::CircuitClass::NotCircuit) {
            auto eps_T = sgf::find_direction(in.graph, term.tree);
            sgf::invariant(eps_T.has_value(),
                           "decomposition term admits no direction");
            auto walk = sgf::canonical_closed_walk(in.graph, term.tree, *eps_T);
            auto hd = sgf::half_integer_decomposition(in.graph, term.tree, walk);
            jt["half_decomposition"] =
                sgf::half_decomposition_to_json(in.graph, hd);
        }
        terms.push_back(std::move(jt));
    }
    report["terms"] = std::move(terms);
    if (trace) report["trace"] = tr.lines;
    report["status"] = kOk;
    write_output(out_path, report.dump(2));
    return kOk;
}

int cmd_classify(const std::string& path, const std::string& format,
                 const std::string& out_path) {
    std::string bytes = read_file(path);
    sgf::LoadedInput in = load_or_throw(bytes);

    std::vector<int> all(in.graph.edge_count());
    for (int e = 0; e < in.graph.edge_count(); ++e) all[e] = e;
    auto det = sgf::detect_cycle_tree(in.graph, all);

    if (format == "dot") {
        // Arrows show the cycle-tree direction when one exists, otherwise the
        // input orientation.
        std::optional<sgf::Orientation> dir;
        if (det.tree) dir = sgf::find_direction(in.graph, *det.tree);
        write_output(out_path,
                     sgf::to_dot(in.graph, "cycle_tree", dir ? &*dir : &in.eps,
                                 det.tree ? &*det.tree : nullptr));
        return kOk;
    }

    Json report = report_header("classify", path, bytes);
    if (!det.tree) {
        report["cycle_tree"] = {{"ok", false}, {"error", det.error}};
        report["status"] = kOk;
        write_output(out_path, report.dump(2));
        return kOk;
    }
    const auto& t = *det.tree;
    report["cycle_tree"] = {{"ok", true}};
    report["structure"] = sgf::tree_to_json(in.graph, t);

    auto parity = sgf::check_parity(in.graph, t);
    Json per_cycle = Json::array();
    for (const auto& cp : parity.cycles)
        per_cycle.push_back({{"cycle", cp.cycle},
                             {"sign", cp.sign},
                             {"intersection_count", cp.intersection_count},
                             {"ok", cp.ok}});
    report["parity"] = {{"ok", parity.ok}, {"cycles", std::move(per_cycle)}};

    if (parity.ok) {
        auto eps_T = sgf::find_direction(in.graph, t);
        sgf::invariant(eps_T.has_value(), "parity holds but no direction found");
        report["direction"] = sgf::orientation_to_json(in.graph, *eps_T);
        Json ind = Json::object();
        auto iv = sgf::indicator(in.graph, t);
        for (int r : in.graph.edges_by_id())
            ind[in.graph.edge_id(r)] = iv[r];
        report["indicator"] = std::move(ind);
        auto cls = sgf::classify_circuit(in.graph, t);
        report["circuit"] = sgf::circuit_to_json(in.graph, t, cls);
    } else {
        report["direction"] = nullptr;
    }
    report["status"] = kOk;
    write_output(out_path, report.dump(2));
    return kOk;
}

int cmd_oracle(const std::string& path, bool family, int max_edges, int bound,
               const std::string& out_path) {
    if (family) {
        sgf::SweepResult res = sgf::indecomposability_sweep(4, max_edges, bound);
        Json report{{"command", "oracle"},
                    {"mode", "family"},
                    {"max_vertices", 4},
                    {"max_edges", max_edges},
                    {"bound", bound},
                    {"graphs", res.graphs},
                    {"flow_instances", res.flow_instances},
                    {"verdicts",
                     {{"indecomposable", res.indecomposable},
                      {"decomposable", res.decomposable}}},
                    {"disagreements", res.disagreements},
                    {"disagreement_rows", res.disagreement_rows},
                    {"decomposition_terms", res.decomposition_terms},
                    {"decomposition_violations", res.decomposition_violations}};
        bool ok = res.disagreements == 0 && res.decomposition_violations == 0;
        report["status"] = ok ? kOk : kInvariant;
        write_output(out_path, report.dump(2));
        if (!ok)
            throw sgf::InvariantError("family sweep found disagreements");
        return kOk;
    }

    std::string bytes = read_file(path);
    sgf::LoadedInput in = load_or_throw(bytes);
    if (!in.flow) throw sgf::ParseError("oracle requires a 'flow' field");
    if (sgf::is_trivial(*in.flow))
        throw sgf::ParseError("oracle requires a nontrivial flow");
    if (!sgf::is_flow(in.graph, *in.flow, in.eps))
        throw sgf::ParseError("flow is not conservative");

    bool fast = sgf::is_indecomposable(in.graph, *in.flow, in.eps).indecomposable;
    bool slow = sgf::brute_force_indecomposable(in.graph, *in.flow, in.eps);
    Json report = report_header("oracle", path, bytes);
    report["flow"] = sgf::flow_to_json(in.graph, *in.flow);
    report["verdicts"] = {
        {"structural", fast ? "indecomposable" : "decomposable"},
        {"brute_force", slow ? "indecomposable" : "decomposable"}};
    report["agree"] = fast == slow;
    report["status"] = fast == slow ? kOk : kInvariant;
    write_output(out_path, report.dump(2));
    if (fast != slow)
        throw sgf::InvariantError(
            "structural and brute-force verdicts disagree");
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed-graph integer flow decomposition"};
    app.require_subcommand(1);

    std::string file, out_path, format = "json";
    bool trace = false, family = false;
    int max_edges = 5, bound = 3;

    auto* check = app.add_subcommand("check", "validate a graph/flow file");
    check->add_option("file", file)->required();
    check->add_option("--out", out_path);

    auto* decompose = app.add_subcommand(
        "decompose", "decompose a flow into minimal Eulerian walk terms");
    decompose->add_option("file", file)->required();
    decompose->add_flag("--trace", trace, "log every reduction step");
    decompose->add_option("--format", format)
        ->check(CLI::IsMember({"json", "dot"}));
    decompose->add_option("--out", out_path);

    auto* classify = app.add_subcommand(
        "classify", "cycle-tree detection, parity, direction, circuit type");
    classify->add_option("file", file)->required();
    classify->add_option("--format", format)
        ->check(CLI::IsMember({"json", "dot"}));
    classify->add_option("--out", out_path);

    auto* oracle = app.add_subcommand(
        "oracle", "brute-force indecomposability cross-check");
    oracle->add_option("file", file);
    oracle->add_flag("--family", family, "sweep all small graphs and flows");
    oracle->add_option("--max-edges", max_edges)->check(CLI::Range(1, 5));
    oracle->add_option("--bound", bound)->check(CLI::Range(0, 3));
    oracle->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(file, out_path);
        if (decompose->parsed())
            return cmd_decompose(file, trace, format, out_path);
        if (classify->parsed()) return cmd_classify(file, format, out_path);
        if (oracle->parsed()) {
            if (!family && file.empty())
                throw sgf::ParseError("oracle needs a file or --family");
            return cmd_oracle(file, family, max_edges, bound, out_path);
        }
    } catch (const sgf::InvariantError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kInvariant;
    } catch (const sgf::GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return kGuard;
    } catch (const sgf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
    return kOk;
}
