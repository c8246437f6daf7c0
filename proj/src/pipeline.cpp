#include "qsurg/pipeline.hpp"

#include <fstream>
#include <sstream>

namespace qsurg {

namespace {

BinaryMatrix hamming_7_4() {
    return BinaryMatrix{{0, 0, 0, 1, 1, 1, 1}, {0, 1, 1, 0, 0, 1, 1}, {1, 0, 1, 0, 1, 0, 1}};
}

BinaryMatrix repetition(int n) {
    if (n < 2) throw ConfigError("rep:<n> needs n >= 2");
    BinaryMatrix h(n - 1, n);
    for (int r = 0; r + 1 < n; ++r) {
        h.set(r, r, true);
        h.set(r, r + 1, true);
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

BinaryMatrix parse_code_spec(const std::string& spec) {
    if (spec == "hamming-7-4") return hamming_7_4();
    auto starts = [&](const char* prefix) { return spec.rfind(prefix, 0) == 0; };
    if (starts("rep:")) return repetition(std::stoi(spec.substr(4)));
    if (starts("cyclic-rep:")) return cyclic_repetition(std::stoi(spec.substr(11)));
    if (starts("transpose-of:")) return parse_code_spec(spec.substr(13)).transposed();
    if (starts("alist:")) return parse_alist(read_file(spec.substr(6)));
    if (starts("inline:")) {
        std::string rest = spec.substr(7);
        auto x = rest.find('x');
        auto colon = rest.find(':');
        if (x == std::string::npos || colon == std::string::npos || x > colon)
            throw ConfigError("inline spec must be inline:<rows>x<cols>:<bits>");
        int rows = std::stoi(rest.substr(0, x));
        int cols = std::stoi(rest.substr(x + 1, colon - x - 1));
        std::string bits = rest.substr(colon + 1);
        if (int(bits.size()) != rows * cols) throw ConfigError("inline bit string length != rows*cols");
        BinaryMatrix m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (bits[std::size_t(r * cols + c)] == '1') m.set(r, c, true);
        return m;
    }
    throw ConfigError("unknown code spec '" + spec + "'");
}

PipelineConfig parse_config(const std::string& text) {
    PipelineConfig cfg;
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            auto last = s.find_last_not_of(" \t\r");
            s.erase(last == std::string::npos ? 0 : last + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) continue;
        if (!kv.emplace(key, value).second) throw ConfigError("duplicate key '" + key + "'");
    }
    auto take = [&](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    auto c = take("code.c"), d = take("code.d");
    if (!c || !d) throw ConfigError("code.c and code.d are required");
    cfg.code_c = *c;
    cfg.code_d = *d;

    if (auto v = take("mode")) {
        if (*v == "strict") {
            cfg.relative_mode = false;
        } else if (v->rfind("relative:", 0) == 0) {
            cfg.relative_mode = true;
            cfg.relative_t = std::stoi(v->substr(9));
        } else {
            throw ConfigError("mode must be strict or relative:<t>");
        }
    }
    if (auto v = take("budget")) {
        if (v->rfind("2^", 0) == 0)
            cfg.budget = 1ll << std::stoi(v->substr(2));
        else
            cfg.budget = std::stoll(*v);
    }
    if (auto v = take("threads")) cfg.threads = std::stoi(*v);
    if (auto v = take("emit.deformed")) cfg.emit_deformed = *v;
    if (auto v = take("emit.compacted")) cfg.emit_compacted = *v;

    for (int i = 1;; ++i) {
        std::string prefix = "gadget." + std::to_string(i) + ".";
        auto cw = take(prefix + "codeword");
        if (!cw) break;
        GadgetConfig g;
        g.codeword = *cw;
        if (auto f = take(prefix + "family")) {
            if (*f == "path")
                g.family = GadgetFamily::Path;
            else if (*f == "cycle")
                g.family = GadgetFamily::Cycle;
            else if (*f == "complete" || *f == "complete-triangulated")
                g.family = GadgetFamily::CompleteTriangulated;
            else
                throw ConfigError("unknown family '" + *f + "'");
        }
        if (auto o = take(prefix + "orientation")) {
            if (*o == "on-c")
                g.orientation = Orientation::OnC;
            else if (*o == "on-d")
                g.orientation = Orientation::OnD;
            else
                throw ConfigError("orientation must be on-c or on-d");
        }
        cfg.gadgets.push_back(std::move(g));
    }
    if (!kv.empty()) throw ConfigError("unknown key '" + kv.begin()->first + "'");
    return cfg;
}

namespace {

std::string yesno(bool b) { return b ? "pass" : "FAIL"; }

BinaryVector resolve_codeword(const GadgetConfig& g, const HgpCode& code, const CanonicalBasis& basis) {
    const std::vector<BinaryVector>& rows =
        g.orientation == Orientation::OnC ? basis.l_c : basis.l_d;
    if (g.codeword.rfind("row:", 0) == 0) {
        int idx = std::stoi(g.codeword.substr(4));
        if (idx < 0 || idx >= int(rows.size()))
            throw ConfigError("codeword row index out of range (k = " + std::to_string(rows.size()) + ")");
        return rows[std::size_t(idx)];
    }
    if (g.codeword.rfind("bits:", 0) == 0) {
        BinaryVector v = BinaryVector::from_string(g.codeword.substr(5));
        int expect = g.orientation == Orientation::OnC ? code.c.dim(1) : code.d.dim(1);
        if (v.size() != expect) throw ConfigError("codeword bit length != factor bit count");
        return v;
    }
    throw ConfigError("codeword selector must be row:<i> or bits:<01...>");
}

void emit_css_files(const DeformedCssCode& css, const std::string& prefix) {
    auto write = [&](const std::string& suffix, const BinaryMatrix& m) {
        std::ofstream out(prefix + suffix);
        if (!out) throw ConfigError("cannot write '" + prefix + suffix + "'");
        out << emit_alist(m);
    };
    write("-mz.alist", css.meta_z);
    write("-hz.alist", css.h_z);
    write("-hx.alist", css.h_x);
}

}  // namespace

std::string render_gadget_report(const GadgetReport& rep) {
    std::ostringstream os;
    os << "cheeger = " << rep.cheeger.to_string() << (rep.relative_mode ? " (relative, t=" : "")
       << (rep.relative_mode ? std::to_string(rep.relative_t) + ")" : "") << "\n";
    os << "cond.1.expansion = " << yesno(rep.cond_expansion) << "\n";
    os << "cond.2.no-gauge-qubits = " << yesno(rep.cond_no_gauge) << " (dim H0 = " << rep.dim_h0
       << ", dim H-1 = " << rep.dim_hm1 << ")\n";
    os << "cond.3.measures-codeword = " << yesno(rep.cond_measures) << " (dim H1 = " << rep.dim_h1 << ")\n";
    os << "cond.4.sparsity = " << yesno(rep.cond_sparsity) << " (w = " << rep.sparsity_w << ")\n";
    os << "cond.5.size = " << yesno(rep.cond_size) << " (size = " << rep.size
       << ", bound = " << rep.size_bound_log3 << ")\n";
    return os.str();
}

RunReport run_pipeline(const PipelineConfig& config) {
    RunReport out;
    std::ostringstream os;
    SearchOptions opts;
    opts.budget = config.budget;
    opts.threads = config.threads;

    bool failed = false, inconclusive = false;
    auto note_distance = [&](const DistanceResult& r) {
        if (r.status == DistanceResult::Status::BudgetExceeded) inconclusive = true;
    };

    os << "qsurg run report\n";
    os << "schema = " << kReportSchema << "\n";
    os << "tool = " << kToolVersion << "\n\n";

    HgpCode code = build_hgp(ChainComplex::classical_code(parse_code_spec(config.code_c)),
                             ChainComplex::classical_code(parse_code_spec(config.code_d)), opts);
    CanonicalBasis basis = canonical_basis(code);

    os << "[base]\n";
    os << "c = " << config.code_c << "\n";
    os << "d = " << config.code_d << "\n";
    os << "n = " << code.n << "\n";
    os << "k = " << code.k << "\n";
    os << "distance = " << code.distance.to_string() << "\n\n";
    note_distance(code.distance);

    SurgerySequence seq;
    seq.base = code;
    for (std::size_t i = 0; i < config.gadgets.size(); ++i) {
        const GadgetConfig& gc = config.gadgets[i];
        BinaryVector cw = resolve_codeword(gc, code, basis);
        SurgeryGadget gadget =
            synthesize(gc.orientation == Orientation::OnC ? code.c : code.d, cw, gc.family);
        VerifyMode mode;
        mode.relative = config.relative_mode;
        mode.t = config.relative_t;
        GadgetReport grep = verify_conditions(gadget, mode);
        os << "[gadget " << (i + 1) << "]\n";
        os << "family = " << family_name(gc.family) << "\n";
        os << "orientation = " << (gc.orientation == Orientation::OnC ? "on-c" : "on-d") << "\n";
        os << "codeword-weight = " << cw.weight() << "\n";
        os << render_gadget_report(grep);
        if (!grep.all_pass()) failed = true;

        Deformed def = build_deformed(code, gadget, gc.orientation);
        os << "deformed.qubits = " << def.css.qubits << " (ancilla " << def.css.ancilla_qubits << ")\n";
        os << "deformed.z-checks = " << def.css.z_checks << " (ancilla " << def.css.ancilla_z_checks
           << ")\n";
        os << "deformed.meta-checks = " << def.css.meta_checks << "\n";

        MeasurementReport mrep = measured_logicals(code, gadget, gc.orientation);
        os << "measured.classes = " << mrep.classes.size() << "\n";
        os << "measured.k = " << mrep.k_before << " -> " << mrep.k_after << "\n";
        for (const auto& cls : mrep.classes) {
            os << "measured.class." << cls.class_index << " = canonical rows {";
            for (std::size_t r = 0; r < cls.canonical_rows.size(); ++r)
                os << (r ? "," : "") << cls.canonical_rows[r];
            os << "}, " << cls.unit_reps.size() << " certified unit representatives\n";
        }
        os << "\n";
        if (!config.emit_deformed.empty())
            emit_css_files(def.css, config.emit_deformed + "-" + std::to_string(i + 1));
        seq.gadgets.push_back(SequencedGadget{std::move(gadget), gc.orientation});
    }

    if (!seq.gadgets.empty()) {
        os << "[fast-surgery]\n";
        if (!code.distance.exact()) {
            os << "status = inconclusive (base distance unresolved under budget)\n\n";
            inconclusive = true;
        } else {
            FastSurgeryReport frep = verify_fast_conditions(seq, opts);
            os << "target-d = " << frep.target_d << "\n";
            os << "compacted.d1 = " << frep.compacted_d1.to_string() << "\n";
            os << "compacted.d1co = " << frep.compacted_d1co.to_string() << "\n";
            note_distance(frep.compacted_d1);
            note_distance(frep.compacted_d1co);
            for (std::size_t i = 0; i < frep.metacheck_d1co.size(); ++i) {
                os << "metacheck.d1co." << (i + 1) << " = " << frep.metacheck_d1co[i].to_string() << "\n";
                note_distance(frep.metacheck_d1co[i]);
            }
            os << "disjointness = " << yesno(frep.disjointness) << " (structural, g1 1-sparse)\n";
            os << "two-route = " << (frep.two_route_ok ? "ok" : "FAIL") << "\n";
            os << "k = " << frep.k_before << " -> " << frep.k_after << "\n";
            bool pass = frep.all_pass() && frep.two_route_ok;
            bool fast_inconclusive =
                frep.compacted_d1.status == DistanceResult::Status::BudgetExceeded ||
                frep.compacted_d1co.status == DistanceResult::Status::BudgetExceeded;
            for (const auto& m : frep.metacheck_d1co)
                fast_inconclusive |= m.status == DistanceResult::Status::BudgetExceeded;
            os << "summary = " << (fast_inconclusive ? "inconclusive" : (pass ? "pass" : "FAIL")) << "\n\n";
            if (!fast_inconclusive && !pass) failed = true;

            if (!config.emit_compacted.empty()) {
                CompactedCode cc = build_compacted(seq);
                emit_css_files(extract_css(cc.cone, 1), config.emit_compacted);
            }
        }
    }

    os << "[budgets]\n";
    os << "budget = " << config.budget << "\n";
    os << "threads = " << config.threads << "\n";

    out.text = os.str();
    out.exit_status = failed ? kExitConditionFailure : (inconclusive ? kExitInconclusive : kExitPass);
    return out;
}

}  // namespace qsurg
