#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qsurg/pipeline.hpp"

using namespace qsurg;

namespace {

long long parse_budget(const std::string& s) {
    if (s.rfind("2^", 0) == 0) return 1ll << std::stoi(s.substr(2));
    return std::stoll(s);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

GadgetFamily parse_family(const std::string& s) {
    if (s == "path") return GadgetFamily::Path;
    if (s == "cycle") return GadgetFamily::Cycle;
    if (s == "complete" || s == "complete-triangulated") return GadgetFamily::CompleteTriangulated;
    throw ConfigError("unknown family '" + s + "'");
}

BinaryVector parse_bits(const std::string& s) {
    return BinaryVector::from_string(s.rfind("bits:", 0) == 0 ? s.substr(5) : s);
}

int cmd_build(const std::string& c, const std::string& d, long long budget, int threads) {
    SearchOptions opts{budget, threads};
    HgpCode code = build_hgp(ChainComplex::classical_code(parse_code_spec(c)),
                             ChainComplex::classical_code(parse_code_spec(d)), opts);
    std::cout << "n = " << code.n << "\nk = " << code.k << "\ndistance = " << code.distance.to_string()
              << "\n";
    return code.distance.status == DistanceResult::Status::BudgetExceeded ? kExitInconclusive : kExitPass;
}

int cmd_gadget(const std::string& spec, const std::string& codeword, const std::string& family,
               bool relative, int relative_t, long long budget) {
    ChainComplex code = ChainComplex::classical_code(parse_code_spec(spec));
    BinaryVector cw(0);
    if (codeword.rfind("row:", 0) == 0) {
        auto basis = kernel_basis(code.boundary(1));
        int idx = std::stoi(codeword.substr(4));
        if (idx < 0 || idx >= int(basis.size())) throw ConfigError("codeword row index out of range");
        cw = basis[std::size_t(idx)];
    } else {
        cw = parse_bits(codeword);
    }
    SurgeryGadget gadget = synthesize(code, cw, parse_family(family));
    VerifyMode mode;
    mode.relative = relative;
    mode.t = relative_t;
    int cheeger_bits = std::min<long long>(22, budget > 0 ? 63 - std::countl_zero((unsigned long long)budget)
                                                          : 22);
    GadgetReport rep = verify_conditions(gadget, mode, cheeger_bits);
    std::cout << "G dims = (" << gadget.g_complex.dim(1) << ", " << gadget.g_complex.dim(0) << ", "
              << gadget.g_complex.dim(-1) << ")\n"
              << render_gadget_report(rep);
    return rep.all_pass() ? kExitPass : kExitConditionFailure;
}

int cmd_verify(const std::string& config_path) {
    RunReport rep = run_pipeline(parse_config(read_file(config_path)));
    std::cout << rep.text;
    return rep.exit_status;
}

int cmd_roundtrip(const std::string& in, const std::string& out_path) {
    std::string text = read_file(in);
    BinaryMatrix m = parse_alist(text);
    std::string emitted = emit_alist(m);
    if (!(parse_alist(emitted) == m)) {
        std::cerr << "round-trip mismatch\n";
        return kExitConditionFailure;
    }
    if (out_path.empty())
        std::cout << emitted;
    else {
        std::ofstream out(out_path);
        out << emitted;
    }
    std::cerr << "round-trip ok: " << m.rows() << " x " << m.cols() << "\n";
    return kExitPass;
}

int cmd_toric_demo(int d, int blocks, std::vector<std::string> bs, long long budget, int threads,
                   bool face_free) {
    SearchOptions opts{budget, threads};
    ToricInstance inst = build_toric(d, blocks, opts);
    std::cout << "[[" << inst.code.n << ", " << inst.code.k << ", " << inst.code.distance.to_string()
              << "]]\n";
    if (bs.empty()) bs.push_back(std::string(std::size_t(blocks), '1'));
    std::vector<BinaryVector> plan;
    for (const auto& s : bs) plan.push_back(parse_bits(s));
    plan_measurements(inst, plan);
    std::cout << "b-perp dimension = " << inst.b_perp.size() << "\n";

    std::vector<SurgeryGadget> gadgets;
    for (std::size_t i = 0; i < plan.size(); ++i) {
        SurgeryGadget g = toric_gadget(inst, plan[i], !face_free);
        CheckResult g1 = g1_condition_check(inst, g);
        Deformed def = build_deformed(inst.code, g, Orientation::OnC);
        std::cout << "gadget " << (i + 1) << ": |c| = " << g.codeword.weight()
                  << ", ancilla qubits = " << def.css.ancilla_qubits << " (edge block "
                  << g.g_complex.dim(0) * inst.code.d.dim(0) << ", face block "
                  << g.g_complex.dim(-1) * inst.code.d.dim(1) << ")"
                  << ", meta-checks = " << def.css.meta_checks << "\n";
        std::cout << "gadget " << (i + 1) << ": g1-condition " << (g1.ok ? "pass" : "FAIL") << " ("
                  << g1.detail << ")\n";
        if (plan[i].weight() == 1) {
            MetaCheckGraph graph = metacheck_graph(def.css, g, inst.code.d, opts);
            std::cout << "gadget " << (i + 1) << ": meta graph " << graph.vertices << " vertices, "
                      << graph.edges.size() << " ancilla edges, 4-regular "
                      << (graph.four_regular ? "yes" : "no") << ", connected "
                      << (graph.connected ? "yes" : "no") << ", cycle rank " << graph.cycle_rank
                      << ", min undetected weight " << graph.min_undetected_weight.to_string() << "\n";
        }
        gadgets.push_back(std::move(g));
    }
    ToricDistanceReport rep = verify_toric_distances(inst, gadgets, opts);
    for (std::size_t i = 0; i < rep.deformed_d1.size(); ++i)
        std::cout << "deformed " << (i + 1) << ": d1 = " << rep.deformed_d1[i].to_string()
                  << ", d1co = " << rep.deformed_d1co[i].to_string() << "\n";
    std::cout << "compacted: d1 = " << rep.compacted_d1.to_string()
              << ", d1co = " << rep.compacted_d1co.to_string() << "\n";
    bool ok = rep.distances_at_least_d();
    std::cout << "distances >= d: " << (ok ? "pass" : "FAIL") << "\n";
    return ok ? kExitPass : kExitConditionFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant-time surgery gadgets on hypergraph product codes"};
    app.require_subcommand(1);

    std::string c_spec, d_spec, code_spec, codeword, family = "path", config_path, in_path, out_path;
    std::string orientation = "on-c", budget_str = "2^26";
    int threads = 1, relative_t = 0, toric_d = 3, toric_blocks = 1;
    bool relative = false, face_free = false;
    std::vector<std::string> bs;

    auto* build = app.add_subcommand("build", "build an HGP code and report its parameters");
    build->add_option("--c", c_spec, "C factor code spec")->required();
    build->add_option("--d", d_spec, "D factor code spec")->required();

    auto* gadget = app.add_subcommand("gadget", "synthesize a surgery gadget and verify its conditions");
    gadget->add_option("--code", code_spec, "classical code spec")->required();
    gadget->add_option("--codeword", codeword, "row:<i> or bits:<01...>")->required();
    gadget->add_option("--family", family, "path | cycle | complete-triangulated");
    gadget->add_flag("--relative", relative, "use relative expansion");
    gadget->add_option("--relative-t", relative_t, "relative cap t");

    auto* deform = app.add_subcommand("deform", "build one deformed code and emit its matrices");
    deform->add_option("--config", config_path, "pipeline config file")->required();

    auto* compact = app.add_subcommand("compact", "build the compacted code of a config's sequence");
    compact->add_option("--config", config_path, "pipeline config file")->required();

    auto* verify = app.add_subcommand("verify", "run the full pipeline from a config file");
    verify->add_option("--config", config_path, "pipeline config file")->required();

    auto* toric = app.add_subcommand("toric-demo", "toric case study: gadgets, meta graph, distances");
    toric->add_option("--distance", toric_d, "side length d");
    toric->add_option("--blocks", toric_blocks, "number of toric blocks M");
    toric->add_option("--b", bs, "measurement vectors over the blocks, e.g. 11 then 10");
    toric->add_flag("--face-free", face_free, "drop the cycle face (gauge variant)");

    auto* roundtrip = app.add_subcommand("roundtrip", "parse an alist file and re-emit it");
    roundtrip->add_option("--in", in_path, "input alist")->required();
    roundtrip->add_option("--out", out_path, "output path (stdout if omitted)");

    for (auto* sub : {build, gadget, deform, compact, verify, toric}) {
        sub->add_option("--budget", budget_str, "search budget (integer or 2^k)");
        sub->add_option("--threads", threads, "worker cap for distance searches");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        long long budget = parse_budget(budget_str);
        if (build->parsed()) return cmd_build(c_spec, d_spec, budget, threads);
        if (gadget->parsed()) return cmd_gadget(code_spec, codeword, family, relative, relative_t, budget);
        if (verify->parsed() || deform->parsed() || compact->parsed()) return cmd_verify(config_path);
        if (toric->parsed()) return cmd_toric_demo(toric_d, toric_blocks, bs, budget, threads, face_free);
        if (roundtrip->parsed()) return cmd_roundtrip(in_path, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
