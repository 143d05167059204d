// End-to-end tests of the command-line tool: golden outputs for the two
// built-in codes, exit codes, JSON mode and simulator determinism. The
// binary path is injected by the build as Z2Z4_CLI_PATH.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "z2z4/decode.hpp"
#include "z2z4/encode.hpp"
#include "z2z4/presets.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(Z2Z4_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_path(const std::string& name) {
    return std::string("cli_test_") + name;
}

}  // namespace

using namespace z2z4;
using doctest::Contains;

TEST_CASE("info prints type, info set, distance and linearity") {
    RunResult r = run_cli("info example3");
    CHECK(r.exit_code == 0);
    CHECK_MESSAGE(r.output.find("(0,4;0,2;0)") != std::string::npos, r.output);
    CHECK(r.output.find("{5,6,7,8}") != std::string::npos);
    CHECK(r.output.find("min distance  4") != std::string::npos);
    CHECK(r.output.find("t             1") != std::string::npos);
    CHECK(r.output.find("binary linear yes") != std::string::npos);

    RunResult r4 = run_cli("info example4");
    CHECK(r4.exit_code == 0);
    CHECK(r4.output.find("(0,8;1,2;0)") != std::string::npos);
    CHECK(r4.output.find("{11,13,14,15,16}") != std::string::npos);
    CHECK(r4.output.find("t             3") != std::string::npos);
}

TEST_CASE("info rejects an all-zero generator file with a parse error") {
    std::string path = temp_path("zero.code");
    std::ofstream(path) << "alpha 0 beta 4\nrows 1\n- | 0 0 0 0\n";
    RunResult r = run_cli("info " + path);
    CHECK(r.exit_code == 2);
    CHECK_MESSAGE(r.output.find("empty code") != std::string::npos, r.output);
    std::remove(path.c_str());
}

TEST_CASE("encode golden values and length validation") {
    CHECK(run_cli("encode example3 0101").output == "01010101\n");
    CHECK(run_cli("encode example4 11111").output == "1111111111111111\n");
    CHECK(run_cli("encode example4 10100").output == "0100101110110100\n");
    CHECK(run_cli("encode example4 00000").output == "0000000000000000\n");
    RunResult bad = run_cli("encode example3 011");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("4 bits") != std::string::npos);
}

TEST_CASE("decode recovers the worked single-error example, both methods") {
    for (const char* method : {"alt", "syndrome"}) {
        RunResult r = run_cli(std::string("decode example3 example3 01010100 --method ") +
                              method);
        CHECK(r.exit_code == 0);
        CHECK_MESSAGE(r.output.find("codeword         01010101") != std::string::npos,
                      r.output);
        CHECK(r.output.find("info             0101") != std::string::npos);
        CHECK(r.output.find("(1,3,5,7)(2,4,6,8)") != std::string::npos);
    }
}

TEST_CASE("decode of an unmodified codeword uses the identity") {
    RunResult r = run_cli("decode example3 example3 01010101");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("info             0101") != std::string::npos);
    CHECK(r.output.find("permutation      ()") != std::string::npos);
    CHECK(r.output.find("errors corrected 0") != std::string::npos);
}

TEST_CASE("decode --json emits the same fields machine-readably") {
    RunResult r = run_cli("decode example4 example4 1111111111110100 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"status\": \"decoded\"") != std::string::npos);
    CHECK(r.output.find("\"codeword\": \"1111111111111111\"") != std::string::npos);
    CHECK(r.output.find("\"info\": \"11111\"") != std::string::npos);
}

TEST_CASE("decode reports FAIL with exit code 1 when no shift certifies") {
    // Find a received word the decoder must reject: far from every codeword.
    Z2Z4Code c = example3_code();
    PDSet S = example3_pd_set();
    std::string failing;
    for (std::size_t mask = 0; mask < 256 && failing.empty(); ++mask) {
        BinaryVector y(8);
        for (int b = 0; b < 8; ++b) y[b] = (mask >> b) & 1;
        if (decode_alternative(c, S, y).status == DecodeStatus::failure)
            failing = format_binary(y);
    }
    REQUIRE(!failing.empty());
    RunResult r = run_cli("decode example3 example3 " + failing);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL: more than 1 errors") != std::string::npos);
}

TEST_CASE("the syndrome method is gated out for nonlinear codes with gamma > kappa") {
    Z2Z4Code c = oracle::nonlinear_demo_code();
    std::string code_path = temp_path("nonlinear.code");
    std::string pd_path = temp_path("nonlinear.pdset");
    {
        std::ofstream f(code_path);
        write_code(f, c);
        PDSet trivial{{Permutation(c.length())}, standard_info_set(c.type()), c.t()};
        std::ofstream g(pd_path);
        write_pd_set(g, trivial);
    }
    std::string y(c.length(), '0');
    RunResult gated =
        run_cli("decode " + code_path + " " + pd_path + " " + y + " --method syndrome");
    CHECK(gated.exit_code == 3);
    CHECK_MESSAGE(gated.output.find("error") != std::string::npos, gated.output);
    RunResult alt = run_cli("decode " + code_path + " " + pd_path + " " + y);
    CHECK(alt.exit_code == 0);
    std::remove(code_path.c_str());
    std::remove(pd_path.c_str());
}

TEST_CASE("round trip: decode(encode(a)) prints info a for every a") {
    for (int mask = 0; mask < 16; ++mask) {
        std::string a;
        for (int b = 0; b < 4; ++b) a += char('0' + ((mask >> b) & 1));
        RunResult enc = run_cli("encode example3 " + a);
        REQUIRE(enc.exit_code == 0);
        std::string codeword = enc.output.substr(0, enc.output.size() - 1);
        RunResult dec = run_cli("decode example3 example3 " + codeword);
        CHECK(dec.exit_code == 0);
        CHECK(dec.output.find("info             " + a) != std::string::npos);
    }
}

TEST_CASE("pdset verify certifies the presets and fails the identity alone") {
    CHECK(run_cli("pdset verify example3 example3").exit_code == 0);
    CHECK(run_cli("pdset verify example4 example4").exit_code == 0);

    std::string path = temp_path("identity.pdset");
    std::ofstream(path) << "info_set: 5,6,7,8\nt: 1\n()\n";
    RunResult r = run_cli("pdset verify example3 " + path);
    CHECK(r.exit_code == 1);
    CHECK_MESSAGE(r.output.find("FAIL") != std::string::npos, r.output);
    // The witness is a weight-1 pattern inside the information set.
    CHECK(r.output.find("00001000") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("pdset verify rejects a candidate that is not an automorphism") {
    std::string path = temp_path("notauto.pdset");
    std::ofstream(path) << "info_set: 5,6,7,8\nt: 1\n(1,2)\n";
    RunResult r = run_cli("pdset verify example3 " + path);
    CHECK(r.exit_code == 3);
    CHECK_MESSAGE(r.output.find("not an automorphism") != std::string::npos, r.output);
    CHECK(r.output.find("(1,2)") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("pdset search finds a certified subset of the example 4 group") {
    std::string candidates = temp_path("group.pdset");
    {
        PDSet S = example4_pd_set();
        std::ofstream f(candidates);
        write_pd_set(f, S);
    }
    std::string out_path = temp_path("found.pdset");
    RunResult r = run_cli("pdset search example4 " + candidates + " --out " + out_path);
    CHECK(r.exit_code == 0);
    CHECK_MESSAGE(r.output.find("PASS") != std::string::npos, r.output);
    // The emitted file must certify when fed back through verify.
    RunResult back = run_cli("pdset verify example4 " + out_path);
    CHECK(back.exit_code == 0);
    std::remove(candidates.c_str());
    std::remove(out_path.c_str());
}

TEST_CASE("simulate is byte-identical for a fixed seed and sane at the extremes") {
    std::string cmd = "simulate example4 example4 --weight 3 --trials 500 --seed 42";
    RunResult a = run_cli(cmd);
    RunResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("successes      500") != std::string::npos);

    RunResult zero = run_cli("simulate example3 example3 --weight 0 --trials 50 --seed 1");
    CHECK(zero.output.find("successes      50") != std::string::npos);

    RunResult beyond = run_cli("simulate example3 example3 --weight 2 --trials 300 --seed 9");
    CHECK(beyond.exit_code == 0);
    CHECK(beyond.output.find("successes      0") != std::string::npos);

    RunResult flips = run_cli("simulate example4 example4 --flip 0.05 --trials 200 --seed 3");
    CHECK(flips.exit_code == 0);
    CHECK(flips.output.find("iid-flip") != std::string::npos);
}

TEST_CASE("simulate validates its parameters") {
    CHECK(run_cli("simulate example3 example3 --flip 1.5 --trials 10").exit_code == 2);
    CHECK(run_cli("simulate example3 example3 --trials 10").exit_code == 2);
    CHECK(run_cli("simulate example3 example3 --weight 2 --flip 0.1 --trials 10").exit_code ==
          2);
}

TEST_CASE("standard-form and dual print the expected matrices") {
    RunResult sf = run_cli("standard-form example3");
    CHECK(sf.exit_code == 0);
    CHECK(sf.output.find("- | 3 2 1 0") != std::string::npos);
    CHECK(sf.output.find("- | 2 3 0 1") != std::string::npos);
    CHECK(sf.output.find("col perm ()") != std::string::npos);

    RunResult du = run_cli("dual example3");
    CHECK(du.exit_code == 0);
    CHECK(du.output.find("- | 1 0 1 2") != std::string::npos);
    CHECK(du.output.find("- | 0 1 2 1") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("decode example3").exit_code == 2);
    CHECK(run_cli("info no_such_file.code").exit_code == 2);
}
