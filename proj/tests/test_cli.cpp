#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>

#include "support.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QRM_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

nlohmann::json run_json(const std::string& args, int expected_exit = 0) {
    auto res = run(args);
    EXPECT_EQ(res.exit_code, expected_exit) << args << "\n" << res.out;
    auto j = nlohmann::json::parse(res.out, nullptr, false);
    EXPECT_FALSE(j.is_discarded()) << res.out;
    if (!j.is_discarded()) {
        EXPECT_EQ(j.value("schema", 0), 1);
    }
    return j;
}

}  // namespace

TEST(Cli, ParamsAndTable) {
    auto p = run_json("params 8 0 2");
    EXPECT_EQ(p["n"], 256);
    EXPECT_EQ(p["kappa"], 36);
    EXPECT_EQ(p["d"], 2);
    EXPECT_EQ(p["k_max"], 3);
    auto t = run_json("table --max-m 10 --min-kmax 2");
    ASSERT_EQ(t["rows"].size(), test_support::kPaperTable.size());
    for (std::size_t i = 0; i < test_support::kPaperTable.size(); ++i) {
        const auto& row = t["rows"][i];
        const auto& want = test_support::kPaperTable[i];
        EXPECT_EQ(row["m"], want[0]);
        EXPECT_EQ(row["kappa"], want[4]);
        EXPECT_EQ(row["k_max"], want[6]);
    }
    auto text = run("--format text table --max-m 3");
    EXPECT_EQ(text.exit_code, 0);
    EXPECT_NE(text.out.find("3\t0\t1\t8\t3\t2\t2"), std::string::npos);
}

TEST(Cli, Classify) {
    EXPECT_EQ(run_json("classify 8 0 2 --k 2 --cube-dim 5 --signed")["tag"], "NontrivialLogical");
    EXPECT_EQ(run_json("classify 8 0 2 --k 2 --cube-dim 7")["tag"], "Stabilizer");
    EXPECT_EQ(run_json("classify 8 1 2 --k 0 --cube \"10000000+<2>\"")["tag"], "NotPreserving");
    auto adm = run_json("classify 8 0 2 --admissible --levels 3");
    EXPECT_EQ(adm["admissible"].size(), 5u);
    auto text = run("--format text classify 8 0 2 --admissible --levels 3");
    EXPECT_NE(text.out.find("Z~(2)\t.\t.\t.\t.\t.\tL\tL\tI\tI"), std::string::npos) << text.out;
}

TEST(Cli, CoversAndSynthesis) {
    auto c = run_json("covers 4 1 2 --K 1,2,3,4");
    EXPECT_EQ(c["count"], 3);
    auto s = run_json("synthesize 3 0 1 --k 2 --cube \"<1,2,3>\" --signed");
    EXPECT_EQ(s["circuit"]["gate_count"], 1);
    EXPECT_EQ(s["circuit"]["text"][0], "CCZ[{1},{2},{3}]");
    auto u = run_json("synthesize 3 0 1 --k 2 --cube \"<1,2,3>\"");
    EXPECT_EQ(u["circuit"]["gate_count"], 7);
    auto q = run_json("synthesize 3 0 1 --k 2 --cube \"<1,2,3>\" --signed --qasm");
    std::string qasm = q["qasm"];
    EXPECT_NE(qasm.find("OPENQASM 2.0;"), std::string::npos);
    EXPECT_NE(qasm.find("z_2_dg q[1];"), std::string::npos);
    EXPECT_NE(qasm.find("z_2 q[3];"), std::string::npos);
    auto d = run_json("decompose 4 0 2 --k 0 --cube \"1000+<2,3>\" --signed");
    ASSERT_EQ(d["terms"].size(), 1u);
    EXPECT_EQ(d["terms"][0]["K"], "{2,3}");
}

TEST(Cli, VerifyRoundTripAndMismatch) {
    auto ok = run_json("verify 4 0 2 --k 1 --cube \"0001+<1,2,3>\" --signed");
    EXPECT_EQ(ok["agree"], true);
    EXPECT_EQ(ok["oracle_tag"], "NontrivialLogical");

    auto circuit = run("synthesize 3 0 1 --k 2 --cube \"<1,2,3>\" --signed");
    std::string path = ::testing::TempDir() + "qrm_cli_circuit.json";
    {
        std::ofstream f(path);
        f << circuit.out;
    }
    auto good = run_json("verify 3 0 1 --k 2 --cube \"<1,2,3>\" --signed --against-circuit " + path);
    EXPECT_EQ(good["equivalent"], true);
    auto bad = run_json("verify 3 0 1 --k 2 --cube \"<1,2,3>\" --against-circuit " + path, 3);
    EXPECT_EQ(bad["equivalent"], false);
    EXPECT_TRUE(bad.contains("witness"));
}

TEST(Cli, DualAndProbe) {
    auto d = run_json("dual --m 4 --cube \"0100+<1,3>\"");
    EXPECT_EQ(d["simplex"], "*1*0");
    EXPECT_EQ(d["simplex_dim"], 1);
    auto back = run_json("dual --m 4 --simplex \"*1*0\"");
    EXPECT_EQ(back["cube"], "0100+<1,3>");
    auto p = run_json("ring-probe 3 0 1 --k 1 --trials 60 --seed 4");
    EXPECT_EQ(p["arms"].size(), 3u);
    EXPECT_TRUE(p["inclusion_failures"].empty());
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("params 3 2 1").exit_code, 1);
    EXPECT_EQ(run("covers 8 1 2 --K 1").exit_code, 1);
    EXPECT_EQ(run("params 3 0").exit_code, 2);
    EXPECT_EQ(run("frobnicate").exit_code, 2);
    EXPECT_EQ(run("classify 4 0 2 --k 1 --cube 0102").exit_code, 2);
    EXPECT_EQ(run("dual --m 4").exit_code, 2);
    auto err = run_json("params 3 2 1", 1);
    EXPECT_EQ(err["kind"], "domain");
}
