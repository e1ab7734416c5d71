// qrm: command-line front end for quantum Reed-Muller subcube logic.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 verification
// failure (the payload carries a witness).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qrm/classify.hpp"
#include "qrm/hypercube.hpp"
#include "qrm/oracle.hpp"
#include "qrm/qrm_code.hpp"
#include "qrm/ring_codes.hpp"
#include "qrm/synthesis.hpp"

using json = nlohmann::ordered_json;
using namespace qrm;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

struct Globals {
    std::string format = "json";
    std::uint64_t seed = 1;
    std::uint64_t sample = 0;
};

struct CodeArgs {
    int m = 0, q = 0, r = 0;
    QrmCode code() const { return QrmCode(m, q, r); }
};

// A command's outcome: JSON payload, optional text rendering, exit code.
struct CommandResult {
    json payload;
    std::string text;
    int exit_code = kExitOk;
};

json header(const std::string& command) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

void add_code_positionals(CLI::App* sub, CodeArgs& args) {
    sub->add_option("m", args.m, "hypercube dimension")->required();
    sub->add_option("q", args.q, "X-stabilizer order")->required();
    sub->add_option("r", args.r, "Z-stabilizer order")->required();
}

json code_json(const QrmCode& code) {
    return json{{"m", code.m()}, {"q", code.q()}, {"r", code.r()}};
}

std::string label(Mask J) { return "J=" + mask_to_set_string(J); }

json gate_json(const Gate& g) {
    json arr = json::array();
    for (Mask J : g) arr.push_back(label(J));
    return arr;
}

json circuit_json(const CzCircuit& c) {
    json gates = json::array();
    json text = json::array();
    for (const auto& g : c.gates()) {
        gates.push_back(gate_json(g));
        text.push_back(gate_to_string(g));
    }
    return json{{"gate_count", c.size()}, {"gates", gates}, {"text", text}};
}

std::string circuit_text(const CzCircuit& c) {
    if (c.empty()) return "(identity)\n";
    std::string s;
    for (const auto& g : c.gates()) s += gate_to_string(g) + "\n";
    return s;
}

Mask parse_label(const std::string& s, int m) {
    std::string body = s;
    if (body.rfind("J=", 0) == 0) body = body.substr(2);
    return parse_generator_list(body, m);
}

CzCircuit circuit_from_json(const json& j, int m) {
    const json& gates = j.contains("circuit") ? j.at("circuit").at("gates") : j.at("gates");
    CzCircuit c;
    for (const auto& g : gates) {
        std::vector<Mask> members;
        for (const auto& l : g) members.push_back(parse_label(l.get<std::string>(), m));
        c.toggle(make_gate(members));
    }
    return c;
}

std::string witness_bits(const BitVec& v) { return v.to_string(); }

json witness_json(const Witness& w, std::size_t kappa) {
    std::string word(kappa, '0');
    for (std::size_t i = 0; i < kappa; ++i)
        if ((w.word >> i) & 1U) word[i] = '1';
    return json{{"logical_word", word},
                {"member_a", witness_bits(w.first)},
                {"phase_a", w.first_phase},
                {"member_b", witness_bits(w.second)},
                {"phase_b", w.second_phase}};
}

std::string word_string(std::uint64_t word, std::size_t kappa) {
    std::string s(kappa, '0');
    for (std::size_t i = 0; i < kappa; ++i)
        if ((word >> i) & 1U) s[i] = '1';
    return s;
}

OracleOptions oracle_options(const Globals& g) {
    OracleOptions o;
    o.seed = g.seed;
    o.sample = g.sample;
    o.force_sample = g.sample != 0;
    return o;
}

// Physical gate list over 2^m qubits in vertex order.
std::string qasm_for(const PhaseFunction& f) {
    int k = f.k();
    std::uint32_t mod = f.modulus();
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "// z_" << k << " = diag(1, exp(i*pi/2^" << k << ")) equals rz(pi/2^" << k << ") up to global phase\n";
    out << "gate z_" << k << " a { rz(pi/" << (1u << k) << ") a; }\n";
    out << "gate z_" << k << "_dg a { rz(-pi/" << (1u << k) << ") a; }\n";
    out << "qreg q[" << f.exponents().size() << "];\n";
    for (std::size_t x = 0; x < f.exponents().size(); ++x) {
        std::uint32_t e = f.exponents()[x];
        if (e == 0) continue;
        bool dagger = e > mod / 2;
        std::uint32_t reps = dagger ? mod - e : e;
        for (std::uint32_t t = 0; t < reps; ++t)
            out << "z_" << k << (dagger ? "_dg" : "") << " q[" << x << "];\n";
    }
    return out.str();
}

std::string tsv_row(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += '\t';
        s += cells[i];
    }
    return s + "\n";
}

CommandResult cmd_params(const CodeArgs& a) {
    auto code = a.code();
    auto p = code.parameters();
    CommandResult res;
    res.payload = header("params");
    res.payload["code"] = code_json(code);
    res.payload["n"] = p.n;
    res.payload["kappa"] = p.kappa;
    res.payload["d"] = p.d;
    res.payload["k_max"] = p.k_max;
    std::ostringstream t;
    t << "QRM_" << code.m() << "(" << code.q() << "," << code.r() << "): [[" << p.n << "," << p.kappa << "," << p.d
      << "]], k_max=" << p.k_max << "\n";
    res.text = t.str();
    return res;
}

CommandResult cmd_table(int max_m, int min_kmax) {
    auto rows = implementation_table(max_m, min_kmax);
    CommandResult res;
    res.payload = header("table");
    json arr = json::array();
    res.text = tsv_row({"m", "q", "r", "n", "kappa", "d", "k_max"});
    for (const auto& row : rows) {
        arr.push_back(json{{"m", row.m},
                           {"q", row.q},
                           {"r", row.r},
                           {"n", row.params.n},
                           {"kappa", row.params.kappa},
                           {"d", row.params.d},
                           {"k_max", row.params.k_max}});
        res.text += tsv_row({std::to_string(row.m), std::to_string(row.q), std::to_string(row.r),
                             std::to_string(row.params.n), std::to_string(row.params.kappa),
                             std::to_string(row.params.d), std::to_string(row.params.k_max)});
    }
    res.payload["rows"] = arr;
    return res;
}

Basis parse_basis(const std::string& s) {
    if (s == "z" || s == "Z") return Basis::Z;
    if (s == "x" || s == "X") return Basis::X;
    throw UsageError("basis must be z or x");
}

struct ClassifyArgs {
    CodeArgs code;
    std::string basis = "z";
    std::optional<int> k;
    bool is_signed = false;
    std::string cube;
    std::optional<int> cube_dim;
    bool admissible = false;
    std::optional<int> levels;
};

CommandResult cmd_classify(const ClassifyArgs& a) {
    auto code = a.code.code();
    CommandResult res;
    res.payload = header("classify");
    res.payload["code"] = code_json(code);
    if (a.admissible) {
        int levels = a.levels ? *a.levels : std::max(code.parameters().k_max, 0);
        auto rows = admissible_table(code, levels);
        json arr = json::array();
        std::string text = "dim";
        for (int d = 0; d <= code.m(); ++d) text += "\t" + std::to_string(d);
        text += "\n";
        for (const auto& row : rows) {
            json tags = json::array();
            std::string line = row.label;
            for (Tag t : row.tags) {
                tags.push_back(tag_name(t));
                line += std::string("\t") + tag_glyph(t);
            }
            arr.push_back(json{{"operator", row.label}, {"basis", basis_name(row.basis)}, {"k", row.k}, {"tags", tags}});
            text += line + "\n";
        }
        res.payload["admissible"] = arr;
        res.text = text;
        return res;
    }
    if (!a.k) throw UsageError("classify needs --k (or --admissible)");
    Basis basis = parse_basis(a.basis);
    int dim = 0;
    json cube_j;
    if (!a.cube.empty()) {
        auto cube = parse_subcube(a.cube, code.m());
        dim = cube.dim();
        cube_j = format_subcube(cube);
    } else if (a.cube_dim) {
        dim = *a.cube_dim;
        if (dim < 0 || dim > code.m()) throw UsageError("cube dimension out of range");
    } else {
        throw UsageError("classify needs --cube or --cube-dim");
    }
    Tag tag = classify_dim(code, basis, *a.k, dim);
    auto t = thresholds(code, basis, *a.k);
    res.payload["basis"] = basis_name(basis);
    res.payload["signed"] = a.is_signed;
    res.payload["k"] = *a.k;
    if (!cube_j.is_null()) res.payload["cube"] = cube_j;
    res.payload["dim"] = dim;
    res.payload["tag"] = tag_name(tag);
    res.payload["thresholds"] = json{{"logical_min", t.logical_min},
                                     {"logical_max", t.logical_max},
                                     {"stabilizer_min", t.stabilizer_min}};
    std::ostringstream text;
    text << tag_name(tag) << " (logical for " << t.logical_min << " <= dim <= " << t.logical_max
         << ", stabilizer for dim >= " << t.stabilizer_min << "; dim = " << dim << ")\n";
    res.text = text.str();
    return res;
}

struct CoversArgs {
    CodeArgs code;
    std::string K;
};

CommandResult cmd_covers(const CoversArgs& a) {
    auto code = a.code.code();
    Mask K = parse_generator_list(a.K, code.m());
    int k = require_level(code, K);
    auto covers = minimal_covers(code, K);
    CommandResult res;
    res.payload = header("covers");
    res.payload["code"] = code_json(code);
    res.payload["K"] = mask_to_set_string(K);
    res.payload["level"] = k;
    json arr = json::array();
    for (const auto& g : covers) {
        arr.push_back(gate_json(g));
        res.text += gate_to_string(g) + "\n";
    }
    res.payload["count"] = covers.size();
    res.payload["covers"] = arr;
    return res;
}

struct SynthArgs {
    CodeArgs code;
    std::optional<int> k;
    std::string cube;
    std::string K;
    bool is_signed = false;
    bool qasm = false;
};

CommandResult cmd_synthesize(const SynthArgs& a) {
    auto code = a.code.code();
    require_logicals(code);
    Subcube cube;
    int k = 0;
    if (!a.K.empty()) {
        if (!a.cube.empty()) throw UsageError("give either --K or --cube, not both");
        Mask K = parse_generator_list(a.K, code.m());
        int level = require_level(code, K);
        k = a.k ? *a.k : level;
        cube = Subcube::standard(code.m(), K);
    } else if (!a.cube.empty()) {
        if (!a.k) throw UsageError("synthesize with --cube needs --k");
        k = *a.k;
        cube = parse_subcube(a.cube, code.m());
    } else {
        throw UsageError("synthesize needs --K or --cube");
    }
    OperatorSpec spec{Basis::Z, a.is_signed, k, cube};
    Tag tag = classify(code, spec);
    auto circuit = arbitrary_subcube_circuit(code, spec);
    CommandResult res;
    res.payload = header("synthesize");
    res.payload["code"] = code_json(code);
    res.payload["k"] = k;
    res.payload["signed"] = a.is_signed;
    res.payload["cube"] = format_subcube(cube);
    res.payload["tag"] = tag_name(tag);
    res.payload["circuit"] = circuit_json(circuit);
    res.text = circuit_text(circuit);
    if (a.qasm) {
        auto q = qasm_for(phase_of_operator(spec));
        res.payload["qasm"] = q;
        res.text += q;
    }
    return res;
}

struct DecomposeArgs {
    CodeArgs code;
    int k = 0;
    std::string cube;
    bool is_signed = false;
};

CommandResult cmd_decompose(const DecomposeArgs& a) {
    auto code = a.code.code();
    auto cube = parse_subcube(a.cube, code.m());
    auto terms = decompose_to_standard(code, a.k, cube, a.is_signed);
    CommandResult res;
    res.payload = header("decompose");
    res.payload["code"] = code_json(code);
    res.payload["cube"] = format_subcube(cube);
    res.payload["k"] = a.k;
    res.payload["signed"] = a.is_signed;
    json arr = json::array();
    for (const auto& t : terms) {
        arr.push_back(json{{"level", t.level},
                           {"K", mask_to_set_string(t.K)},
                           {"subcube", format_subcube(Subcube::standard(code.m(), t.K))}});
        res.text += std::string(a.is_signed ? "Z~(" : "Z(") + std::to_string(t.level) + ")" +
                    format_subcube(Subcube::standard(code.m(), t.K)) + "\n";
    }
    res.payload["terms"] = arr;
    return res;
}

struct VerifyArgs {
    CodeArgs code;
    int k = 0;
    std::string cube;
    bool is_signed = false;
    std::string against;
};

CommandResult cmd_verify(const VerifyArgs& a, const Globals& g) {
    auto code = a.code.code();
    auto cube = parse_subcube(a.cube, code.m());
    OperatorSpec spec{Basis::Z, a.is_signed, a.k, cube};
    auto f = phase_of_operator(spec);
    auto opts = oracle_options(g);
    CommandResult res;
    res.payload = header("verify");
    res.payload["code"] = code_json(code);
    res.payload["cube"] = format_subcube(cube);
    res.payload["k"] = a.k;
    res.payload["signed"] = a.is_signed;
    std::ostringstream text;
    if (!a.against.empty()) {
        std::ifstream in(a.against);
        if (!in) throw UsageError("cannot read circuit file '" + a.against + "'");
        json cj;
        try {
            cj = json::parse(in);
        } catch (const json::exception& e) {
            throw UsageError(std::string("circuit file is not valid JSON: ") + e.what());
        }
        CzCircuit circuit;
        try {
            circuit = circuit_from_json(cj, code.m());
        } catch (const json::exception& e) {
            throw UsageError(std::string("circuit file lacks a gate list: ") + e.what());
        }
        auto eq = verify_equivalence(code, f, circuit, opts);
        res.payload["sampled"] = eq.sampled;
        res.payload["preserves"] = eq.preserves;
        res.payload["equivalent"] = eq.equivalent;
        if (!eq.preserves) res.payload["witness"] = witness_json(*eq.preservation_witness, code.kappa());
        if (eq.word)
            res.payload["witness"] = json{{"logical_word", word_string(*eq.word, code.kappa())},
                                          {"operator_phase", eq.operator_phase},
                                          {"circuit_phase", eq.circuit_phase}};
        text << (eq.equivalent ? "equivalent" : "NOT equivalent") << (eq.sampled ? " (sampled)" : "") << "\n";
        if (!eq.equivalent) res.exit_code = kExitVerification;
    } else {
        auto scanned = scan(code, f, opts);
        Tag oracle = oracle_tag(scanned);
        Tag formula = classify(code, spec);
        res.payload["sampled"] = scanned.sampled;
        res.payload["preserves"] = scanned.preserves;
        res.payload["oracle_tag"] = tag_name(oracle);
        res.payload["classify_tag"] = tag_name(formula);
        res.payload["agree"] = oracle == formula;
        if (scanned.witness) res.payload["witness"] = witness_json(*scanned.witness, code.kappa());
        text << "oracle: " << tag_name(oracle) << ", classify: " << tag_name(formula)
             << (scanned.sampled ? " (sampled)" : "") << "\n";
        if (oracle != formula) res.exit_code = kExitVerification;
    }
    res.text = text.str();
    return res;
}

struct DualArgs {
    int m = 0;
    std::string cube;
    std::string simplex;
};

CommandResult cmd_dual(const DualArgs& a) {
    CommandResult res;
    res.payload = header("dual");
    res.payload["m"] = a.m;
    if (!a.cube.empty() == !a.simplex.empty()) throw UsageError("dual needs exactly one of --cube or --simplex");
    if (!a.cube.empty()) {
        auto cube = parse_subcube(a.cube, a.m);
        auto s = to_simplex(cube);
        res.payload["cube"] = format_subcube(cube);
        res.payload["simplex"] = s.cells;
        res.payload["simplex_dim"] = s.dim();
        res.text = s.cells + "\n";
    } else {
        auto s = parse_simplex(a.simplex);
        if (s.m() != a.m) throw UsageError("simplex length must equal m");
        auto cube = to_subcube(s);
        res.payload["simplex"] = s.cells;
        res.payload["cube"] = format_subcube(cube);
        res.payload["cube_dim"] = cube.dim();
        res.text = format_subcube(cube) + "\n";
    }
    return res;
}

struct ProbeArgs {
    CodeArgs code;
    int k = 0;
    std::uint64_t trials = 10000;
    std::optional<std::uint64_t> seed;
};

json ring_vector_json(const RingVector& v) { return json(v.entries); }

CommandResult cmd_ring_probe(const ProbeArgs& a, const Globals& g) {
    auto code = a.code.code();
    std::uint64_t seed = a.seed ? *a.seed : g.seed;
    auto rep = conjecture_probe(code, a.k, a.trials, seed);
    CommandResult res;
    res.payload = header("ring-probe");
    res.payload["code"] = code_json(code);
    res.payload["k"] = a.k;
    res.payload["trials"] = rep.trials;
    res.payload["seed"] = rep.seed;
    res.payload["evidence_only"] = true;
    json arms = json::array();
    std::ostringstream text;
    for (const auto& arm : rep.arms) {
        arms.push_back(json{{"arm", arm.name},
                            {"trials", arm.trials},
                            {"preserving", arm.preserving},
                            {"members", arm.members},
                            {"preserving_members", arm.preserving_members}});
        text << arm.name << ": trials=" << arm.trials << " preserving=" << arm.preserving
             << " members=" << arm.members << " preserving_members=" << arm.preserving_members << "\n";
    }
    res.payload["arms"] = arms;
    json cands = json::array();
    for (const auto& c : rep.counterexample_candidates) cands.push_back(ring_vector_json(c));
    json fails = json::array();
    for (const auto& c : rep.inclusion_failures) fails.push_back(ring_vector_json(c));
    res.payload["counterexample_candidates"] = cands;
    res.payload["inclusion_failures"] = fails;
    res.payload["verdict"] = rep.verdict;
    text << rep.verdict << " (evidence only)\n";
    res.text = text.str();
    if (!rep.inclusion_failures.empty()) res.exit_code = kExitVerification;
    return res;
}

int emit(const CommandResult& res, const Globals& g) {
    if (g.format == "text")
        std::cout << res.text;
    else
        std::cout << res.payload.dump(2) << "\n";
    return res.exit_code;
}

int emit_error(const std::string& kind, const std::string& message, int code, const Globals& g) {
    if (g.format == "text") {
        std::cerr << "error: " << message << "\n";
    } else {
        json j = header("error");
        j["kind"] = kind;
        j["message"] = message;
        std::cout << j.dump(2) << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Reed-Muller subcube logic: classification, synthesis and verification"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", g.seed, "seed for sampled verification and probes");
    app.add_option("--sample", g.sample, "sample this many logical words instead of a full scan");

    CodeArgs params_args;
    auto* params = app.add_subcommand("params", "code parameters [[n, kappa, d]] and k_max");
    add_code_positionals(params, params_args);

    int max_m = 10, min_kmax = 2;
    auto* table = app.add_subcommand("table", "implementation table of codes with q < r");
    table->add_option("--max-m", max_m, "largest m")->capture_default_str();
    table->add_option("--min-kmax", min_kmax, "smallest k_max")->capture_default_str();

    ClassifyArgs cl;
    auto* classify_cmd = app.add_subcommand("classify", "classify a subcube operator");
    add_code_positionals(classify_cmd, cl.code);
    classify_cmd->add_option("--basis", cl.basis, "z or x")->check(CLI::IsMember({"z", "x", "Z", "X"}));
    classify_cmd->add_option("--k", cl.k, "hierarchy level");
    classify_cmd->add_flag("--signed", cl.is_signed, "signed operator");
    classify_cmd->add_option("--cube", cl.cube, "subcube, e.g. 0110+<1,4> or <2,3,4>");
    classify_cmd->add_option("--cube-dim", cl.cube_dim, "subcube dimension");
    classify_cmd->add_flag("--admissible", cl.admissible, "print the admissible-dimension table");
    classify_cmd->add_option("--levels", cl.levels, "levels shown by --admissible (default k_max)");

    CoversArgs cv;
    auto* covers = app.add_subcommand("covers", "minimal covers of a generator subset");
    add_code_positionals(covers, cv.code);
    covers->add_option("--K", cv.K, "generator subset, e.g. 1,2,3")->required();

    SynthArgs sy;
    auto* synth = app.add_subcommand("synthesize", "logical circuit of a subcube operator");
    add_code_positionals(synth, sy.code);
    synth->add_option("--k", sy.k, "hierarchy level");
    synth->add_option("--cube", sy.cube, "subcube");
    synth->add_option("--K", sy.K, "standard subcube by generator subset");
    synth->add_flag("--signed", sy.is_signed, "signed operator");
    synth->add_flag("--qasm", sy.qasm, "also emit the physical transversal gate list");

    DecomposeArgs de;
    auto* decompose = app.add_subcommand("decompose", "standard-subcube decomposition");
    add_code_positionals(decompose, de.code);
    decompose->add_option("--k", de.k, "hierarchy level")->required();
    decompose->add_option("--cube", de.cube, "subcube")->required();
    decompose->add_flag("--signed", de.is_signed, "signed operator");

    VerifyArgs ve;
    auto* verify = app.add_subcommand("verify", "brute-force phase oracle check");
    add_code_positionals(verify, ve.code);
    verify->add_option("--k", ve.k, "hierarchy level")->required();
    verify->add_option("--cube", ve.cube, "subcube")->required();
    verify->add_flag("--signed", ve.is_signed, "signed operator");
    verify->add_option("--against-circuit", ve.against, "circuit JSON emitted by synthesize");

    DualArgs du;
    auto* dual = app.add_subcommand("dual", "hyperoctahedral duality");
    dual->add_option("--m", du.m, "dimension")->required();
    dual->add_option("--cube", du.cube, "subcube");
    dual->add_option("--simplex", du.simplex, "simplex string over {0,1,*}");

    ProbeArgs pr;
    auto* probe = app.add_subcommand("ring-probe", "randomized probe of the ring-code characterization");
    add_code_positionals(probe, pr.code);
    probe->add_option("--k", pr.k, "hierarchy level")->required();
    probe->add_option("--trials", pr.trials, "number of trials")->capture_default_str();
    probe->add_option("--seed", pr.seed, "probe seed (defaults to the global seed)");

    app.fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (params->parsed()) return emit(cmd_params(params_args), g);
        if (table->parsed()) return emit(cmd_table(max_m, min_kmax), g);
        if (classify_cmd->parsed()) return emit(cmd_classify(cl), g);
        if (covers->parsed()) return emit(cmd_covers(cv), g);
        if (synth->parsed()) return emit(cmd_synthesize(sy), g);
        if (decompose->parsed()) return emit(cmd_decompose(de), g);
        if (verify->parsed()) return emit(cmd_verify(ve, g), g);
        if (dual->parsed()) return emit(cmd_dual(du), g);
        if (probe->parsed()) return emit(cmd_ring_probe(pr, g), g);
    } catch (const UsageError& e) {
        return emit_error("usage", e.what(), kExitUsage, g);
    } catch (const DomainError& e) {
        return emit_error("domain", e.what(), kExitDomain, g);
    }
    return kExitUsage;
}
