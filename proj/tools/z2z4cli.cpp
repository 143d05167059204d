// z2z4: command-line surface for the Z2Z4 library. Subcommands: info,
// encode, decode, pdset verify|search, simulate, standard-form, dual.
// Codes and PD-sets are given as file paths or as the built-in names
// "example3" / "example4". Exit codes: 0 success, 1 decode failure or
// failed certification, 2 usage or parse error, 3 configuration error
// (e.g. the syndrome method gated out, or a non-automorphism candidate).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "z2z4/decode.hpp"
#include "z2z4/encode.hpp"
#include "z2z4/presets.hpp"
#include "z2z4/simulate.hpp"

using json = nlohmann::json;
using namespace z2z4;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDecodeFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitConfig = 3;

std::string format_type(const CodeType& ct) {
    std::ostringstream out;
    out << '(' << ct.alpha << ',' << ct.beta << ';' << ct.gamma << ',' << ct.delta << ';'
        << ct.kappa << ')';
    return out.str();
}

std::string format_coord_set(const CoordSet& J) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < J.size(); ++i) out << (i ? "," : "") << J[i];
    out << '}';
    return out.str();
}

json type_to_json(const CodeType& ct) {
    return {{"alpha", ct.alpha}, {"beta", ct.beta},   {"gamma", ct.gamma},
            {"delta", ct.delta}, {"kappa", ct.kappa}};
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_info(const std::string& code_arg, bool as_json) {
    Z2Z4Code c = load_code(code_arg);
    const CodeType& ct = c.type();
    json j{{"type", type_to_json(ct)},
           {"dual_type", type_to_json(dual_type(ct))},
           {"length", c.length()},
           {"size", c.size()},
           {"info_set", standard_info_set(ct)},
           {"min_distance", c.min_distance()},
           {"t", c.t()},
           {"binary_linear", c.is_binary_linear()}};
    std::ostringstream out;
    out << "type          " << format_type(ct) << "\n"
        << "dual type     " << format_type(dual_type(ct)) << "\n"
        << "length        " << c.length() << "\n"
        << "size          " << c.size() << "\n"
        << "info set      " << format_coord_set(standard_info_set(ct)) << "\n"
        << "min distance  " << c.min_distance() << "\n"
        << "t             " << c.t() << "\n"
        << "binary linear " << (c.is_binary_linear() ? "yes" : "no") << "\n";
    emit(j, as_json, out.str());
    return kExitOk;
}

int cmd_encode(const std::string& code_arg, const std::string& bits, bool as_json) {
    Z2Z4Code c = load_code(code_arg);
    BinaryVector a = parse_binary(bits);
    const CodeType& ct = c.type();
    if (a.size() != ct.gamma + 2 * ct.delta)
        throw std::invalid_argument("information vector must have " +
                                    std::to_string(ct.gamma + 2 * ct.delta) + " bits, got " +
                                    std::to_string(a.size()));
    BinaryVector x = c.from_standard_frame(encode(a, c));
    emit(json{{"codeword", format_binary(x)}}, as_json, format_binary(x) + "\n");
    return kExitOk;
}

int cmd_decode(const std::string& code_arg, const std::string& pdset_arg,
               const std::string& bits, const std::string& method, bool as_json) {
    Z2Z4Code c = load_code(code_arg);
    PDSet S = load_pd_set(pdset_arg, c.length());
    BinaryVector y = parse_binary(bits);
    if (y.size() != c.length())
        throw std::invalid_argument("received word must have " + std::to_string(c.length()) +
                                    " bits, got " + std::to_string(y.size()));
    BinaryVector ys = c.to_standard_frame(y);
    DecodeOutcome out;
    if (method == "syndrome") {
        try {
            out = decode_syndrome(c, S, ys);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitConfig;
        }
    } else {
        out = decode_alternative(c, S, ys);
    }
    if (out.status == DecodeStatus::failure) {
        emit(json{{"status", "fail"}}, as_json, "FAIL: more than " + std::to_string(c.t()) +
                                                    " errors\n");
        return kExitDecodeFail;
    }
    json j{{"status", "decoded"},
           {"codeword", format_binary(c.from_standard_frame(out.codeword))},
           {"info", format_binary(out.info)},
           {"permutation", format_cycles(out.perm_used)},
           {"errors_corrected", out.errors_corrected}};
    std::ostringstream text;
    text << "codeword         " << format_binary(c.from_standard_frame(out.codeword)) << "\n"
         << "info             " << format_binary(out.info) << "\n"
         << "permutation      " << format_cycles(out.perm_used) << "\n"
         << "errors corrected " << out.errors_corrected << "\n";
    emit(j, as_json, text.str());
    return kExitOk;
}

int check_automorphisms(const std::vector<Permutation>& perms, const Z2Z4Code& c) {
    for (const auto& p : perms) {
        if (!is_automorphism(p, c)) {
            std::cerr << "error: not an automorphism of the code: " << format_cycles(p) << "\n";
            return kExitConfig;
        }
    }
    return kExitOk;
}

int cmd_pdset_verify(const std::string& code_arg, const std::string& pdset_arg, bool as_json) {
    Z2Z4Code c = load_code(code_arg);
    PDSet S = load_pd_set(pdset_arg, c.length());
    if (int rc = check_automorphisms(S.perms, c)) return rc;
    PDVerifyResult r = verify_pd_set(S, c.length());
    if (r.ok) {
        emit(json{{"status", "pass"}, {"t", S.radius}}, as_json,
             "PASS: every error pattern of weight <= " + std::to_string(S.radius) +
                 " is moved off the information set\n");
        return kExitOk;
    }
    emit(json{{"status", "fail"}, {"witness", format_binary(r.witness)}}, as_json,
         "FAIL: uncovered error pattern " + format_binary(r.witness) + "\n");
    return kExitDecodeFail;
}

int cmd_pdset_search(const std::string& code_arg, const std::string& perms_arg, int t_override,
                     const std::string& out_path, bool as_json) {
    Z2Z4Code c = load_code(code_arg);
    PDSet candidates = load_pd_set(perms_arg, c.length());
    if (int rc = check_automorphisms(candidates.perms, c)) return rc;
    const CoordSet I = standard_info_set(c.type());
    const int t = t_override >= 0 ? t_override : c.t();
    std::optional<PDSet> found = search_pd_set(candidates.perms, I, t, c.length());
    if (!found) {
        emit(json{{"status", "fail"}}, as_json,
             "FAIL: the candidates do not cover all error patterns of weight <= " +
                 std::to_string(t) + "\n");
        return kExitDecodeFail;
    }
    std::ostringstream body;
    write_pd_set(body, *found);
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << body.str();
    }
    json jperms = json::array();
    for (const auto& p : found->perms) jperms.push_back(format_cycles(p));
    json j{{"status", "pass"},
           {"t", found->radius},
           {"info_set", found->info_set},
           {"perms", jperms}};
    std::ostringstream text;
    text << "PASS: certified set of " << found->perms.size() << " permutations\n" << body.str();
    emit(j, as_json, text.str());
    return kExitOk;
}

int cmd_simulate(const std::string& code_arg, const std::string& pdset_arg,
                 const SimParams& params, bool as_json) {
    Z2Z4Code c = load_code(code_arg);
    PDSet S = load_pd_set(pdset_arg, c.length());
    SimReport r = simulate(c, S, params);
    json j{{"trials", r.trials},
           {"seed", r.seed},
           {"error_model", r.error_model},
           {"successes", r.successes},
           {"failures", r.failures},
           {"miscorrections", r.miscorrections}};
    std::ostringstream text;
    text << "trials         " << r.trials << "\n"
         << "seed           " << r.seed << "\n"
         << "error model    " << r.error_model << "\n"
         << "successes      " << r.successes << "\n"
         << "failures       " << r.failures << "\n"
         << "miscorrections " << r.miscorrections << "\n";
    emit(j, as_json, text.str());
    return kExitOk;
}

int cmd_standard_form(const std::string& code_arg, bool as_json) {
    Z2Z4Code c = load_code(code_arg);
    const StandardForm& sf = c.standard();
    json jrows = json::array();
    for (const auto& r : sf.rows) jrows.push_back(format_mixed(r));
    json j{{"type", type_to_json(sf.type)},
           {"rows", jrows},
           {"col_perm", format_cycles(sf.col_perm)}};
    std::ostringstream text;
    text << "type     " << format_type(sf.type) << "\n";
    for (const auto& r : sf.rows) text << "row      " << format_mixed(r) << "\n";
    text << "col perm " << format_cycles(sf.col_perm) << "\n";
    emit(j, as_json, text.str());
    return kExitOk;
}

int cmd_dual(const std::string& code_arg, bool as_json) {
    Z2Z4Code c = load_code(code_arg);
    json jrows = json::array();
    for (const auto& r : c.parity()) jrows.push_back(format_mixed(r));
    json j{{"dual_type", type_to_json(dual_type(c.type()))}, {"rows", jrows}};
    std::ostringstream text;
    text << "dual type " << format_type(dual_type(c.type())) << "\n";
    for (const auto& r : c.parity()) text << "row       " << format_mixed(r) << "\n";
    emit(j, as_json, text.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Z2Z4-additive codes: encoding, permutation decoding and PD-set tooling"};
    app.require_subcommand(1);
    app.fallthrough();  // lets --json appear after the subcommand
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON instead of plain text");

    std::string code_arg, pdset_arg, bits, method = "alt", out_path;
    int t_override = -1;
    SimParams params;
    std::optional<int> weight;
    std::optional<double> flip_p;
    params.trials = 1000;

    auto* info = app.add_subcommand("info", "print type, info set, distance and linearity");
    info->add_option("code", code_arg, "code file or preset name")->required();

    auto* enc = app.add_subcommand("encode", "systematically encode an information vector");
    enc->add_option("code", code_arg)->required();
    enc->add_option("info", bits, "information bits, e.g. 0101")->required();

    auto* dec = app.add_subcommand("decode", "permutation-decode a received word");
    dec->add_option("code", code_arg)->required();
    dec->add_option("pdset", pdset_arg, "PD-set file or preset name")->required();
    dec->add_option("received", bits, "received bits")->required();
    dec->add_option("--method", method, "alt (default) or syndrome")
        ->check(CLI::IsMember({"alt", "syndrome"}));

    auto* pd = app.add_subcommand("pdset", "verify or search for PD-sets");
    pd->require_subcommand(1);
    auto* pdv = pd->add_subcommand("verify", "certify a PD-set exhaustively");
    pdv->add_option("code", code_arg)->required();
    pdv->add_option("pdset", pdset_arg)->required();
    auto* pds = pd->add_subcommand("search", "greedy cover over candidate automorphisms");
    pds->add_option("code", code_arg)->required();
    pds->add_option("perms", pdset_arg, "candidate permutations (PD-set file format)")
        ->required();
    pds->add_option("--t", t_override, "target radius (default: the code's t)");
    pds->add_option("--out", out_path, "also write the certified set to this file");

    auto* sim = app.add_subcommand("simulate", "seeded Monte-Carlo decoding trials");
    sim->add_option("code", code_arg)->required();
    sim->add_option("pdset", pdset_arg)->required();
    sim->add_option("--trials", params.trials, "number of trials (default 1000)");
    sim->add_option("--seed", params.seed, "RNG seed (default 0)");
    auto* w_opt = sim->add_option("--weight", weight, "fixed error weight per trial");
    sim->add_option("--flip", flip_p, "iid bit-flip probability")->excludes(w_opt);

    auto* sform = app.add_subcommand("standard-form", "print the standard-form generator rows");
    sform->add_option("code", code_arg)->required();

    auto* du = app.add_subcommand("dual", "print the parity-check rows");
    du->add_option("code", code_arg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*info) return cmd_info(code_arg, as_json);
        if (*enc) return cmd_encode(code_arg, bits, as_json);
        if (*dec) return cmd_decode(code_arg, pdset_arg, bits, method, as_json);
        if (*pdv) return cmd_pdset_verify(code_arg, pdset_arg, as_json);
        if (*pds) return cmd_pdset_search(code_arg, pdset_arg, t_override, out_path, as_json);
        if (*sim) {
            params.weight = weight;
            params.flip_p = flip_p;
            return cmd_simulate(code_arg, pdset_arg, params, as_json);
        }
        if (*sform) return cmd_standard_form(code_arg, as_json);
        if (*du) return cmd_dual(code_arg, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
