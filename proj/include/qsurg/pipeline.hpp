#ifndef QSURG_PIPELINE_HPP
#define QSURG_PIPELINE_HPP

#include "qsurg/alist.hpp"
#include "qsurg/toric.hpp"

// Configuration-driven orchestration: parse classical codes, run
// build -> gadget -> deform -> compact -> verify, emit alist matrices and a
// deterministic key-value report.

namespace qsurg {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error("config: " + what) {}
};

// Code specs: hamming-7-4 | rep:<n> | cyclic-rep:<n> | transpose-of:<spec> |
// alist:<path> | inline:<rows>x<cols>:<row-major bits>
BinaryMatrix parse_code_spec(const std::string& spec);

struct GadgetConfig {
    std::string codeword;  // row:<index> into the canonical kernel basis, or bits:<01...>
    GadgetFamily family = GadgetFamily::Path;
    Orientation orientation = Orientation::OnC;
};

struct PipelineConfig {
    std::string code_c, code_d;
    std::vector<GadgetConfig> gadgets;
    bool relative_mode = false;
    int relative_t = 0;
    long long budget = 1ll << 26;
    int threads = 1;
    std::string emit_deformed;   // path prefix, optional
    std::string emit_compacted;  // path prefix, optional
};

// Key-value lines ("key = value", '#' comments). Gadgets are numbered
// gadget.<i>.codeword / .family / .orientation starting from 1.
PipelineConfig parse_config(const std::string& text);

// Exit status contract: 0 pass, 1 condition failure, 2 inconclusive under the
// search budget, 3 input error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitConditionFailure = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitInputError = 3;

struct RunReport {
    std::string text;
    int exit_status = kExitPass;
};

RunReport run_pipeline(const PipelineConfig& config);

std::string render_gadget_report(const GadgetReport& rep);

inline constexpr const char* kToolVersion = "qsurg 0.1.0";
inline constexpr int kReportSchema = 1;

}  // namespace qsurg

#endif
