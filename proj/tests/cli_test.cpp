#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "corekit/json.hpp"

using namespace corekit;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
    const std::string command = env + (env.empty() ? "" : " ") + COREKIT_CLI_PATH + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return r;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(COREKIT_FIXTURES_DIR) + "/" + name, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(CliKappa, TripleDiagramGolden) {
    const CliRun r = run("kappa --k 4 --family triple");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, fixture("fig6_kappa_triple_k4.txt"));
}

TEST(CliKappa, EmptyAndJson) {
    EXPECT_EQ(run("kappa --k 1 --family pair").out, "(empty)\nsize=0\n");
    EXPECT_EQ(run("kappa --k 5 --family triple --format json").out, "[16,16,9,9,9,9,4,4,4,4,4,4,1,1,1,1,1,1,1,1]\n");
    const CliRun pair = run("kappa --k 4 --family pair --format json");
    EXPECT_EQ(Json::parse(pair.out).get<Partition>(), kappa_pair(4));
}

TEST(CliKappa, InvalidK) {
    EXPECT_EQ(run("kappa --k 0").exit_code, 2);
    EXPECT_EQ(run("kappa --k -3").exit_code, 2);
    EXPECT_EQ(run("kappa --k 2 --family quad").exit_code, 2);
    EXPECT_EQ(run("kappa").exit_code, 2);
}

TEST(CliAbacus, Golden) {
    EXPECT_EQ(run("abacus --k 4").out, fixture("fig3_abacus_k4.txt"));
    EXPECT_EQ(run("abacus --k 5").out, fixture("fig4_abacus_k5.txt"));
    EXPECT_EQ(run("abacus --k 2").out, "0 [1] [2] 3\n");
    EXPECT_EQ(run("abacus --k 1").exit_code, 2);
    EXPECT_EQ(abacus_from_json(Json::parse(run("abacus --k 6 --format json").out)), kappa_bar_abacus(6));
}

TEST(CliQuotient, KappaPairGolden) {
    EXPECT_EQ(run("quotient --kappa-pair 4").out, fixture("fig2_quotient_k4.txt"));
    EXPECT_EQ(run("quotient --t 2 --partition '(2,2)'").out, "core=()\nquotient=(1),(1)\n");
    EXPECT_EQ(run("quotient --t 2 --partition '(1,2)'").exit_code, 2);
    EXPECT_EQ(run("quotient --t 1 --partition '(2)'").exit_code, 2);
    EXPECT_EQ(run("quotient --t 2").exit_code, 2);
}

TEST(CliSquare, Golden) {
    EXPECT_EQ(run("square --m 5").out, fixture("fig5_square_split_m5.txt"));
    EXPECT_EQ(run("square --m 0").exit_code, 2);
}

TEST(CliBijection, LabelledDissections) {
    EXPECT_EQ(run("bijection --k 4 --mode labels").out, fixture("sec3_1_labels_k4.txt"));
    EXPECT_EQ(run("bijection --k 5 --mode labels").out, fixture("sec3_2_labels_k5.txt"));
    EXPECT_EQ(run("bijection --k 2 --mode labels").out, ".\no\n");
    EXPECT_EQ(run("bijection --k 2 --mode labels --width 1").out, ".\no\n");
    EXPECT_EQ(run("bijection --k 0").exit_code, 2);
}

TEST(CliBijection, Trace) {
    EXPECT_EQ(run("bijection --k 1 --mode trace").out, "[]\n");
    const CliRun r = run("bijection --k 6 --mode trace");
    EXPECT_EQ(r.exit_code, 0);
    const CellMap map = cell_map_from_json(Json::parse(r.out), 6);
    EXPECT_EQ(map.entries, build_bijection(6).entries);
    EXPECT_TRUE(verify_bijection(map, 6).ok());
}

TEST(CliVerify, Suites) {
    const CliRun r = run("verify --k-max 10 --suites theorem3");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "theorem3: 10/10 PASS\n");
    EXPECT_EQ(run("verify --k-max 0").exit_code, 2);
    EXPECT_EQ(run("verify --k-max 3 --suites bogus").exit_code, 2);

    const CliRun maximal = run("verify --k-max 4 --suites maximal");
    EXPECT_EQ(maximal.exit_code, 0);
    EXPECT_EQ(maximal.out, "maximal: 4/4 PASS\n");

    const CliRun several = run("verify --k-max 6 --suites theorem6,remarks,bijection,eq1 --trials 200");
    EXPECT_EQ(several.exit_code, 0);
    EXPECT_EQ(several.out, "theorem6: 6/6 PASS\nremarks: 6/6 PASS\nbijection: 6/6 PASS\neq1: 200/200 PASS\n");
}

TEST(CliVerify, Deterministic) {
    const std::string args = "verify --k-max 3 --suites eq1 --seed 99 --trials 300";
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliEnumerate, Output) {
    const CliRun r = run("enumerate 3 5");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "count=7 max_size=8 max_core=(4,2,1^2)\n");
    EXPECT_EQ(run("enumerate 3 4 5").out, "count=4 max_size=2 max cores: (1^2),(2)\n");
    EXPECT_EQ(run("enumerate 2 3 --list").out, "count=2 max_size=1 max_core=(1)\n()\n(1)\n");
}

TEST(CliEnumerate, JsonParsesBack) {
    const Json j = Json::parse(run("enumerate 4 5 --format json").out);
    EXPECT_EQ(j.at("count"), 14);
    EXPECT_EQ(j.at("cores").size(), 14u);
    EXPECT_EQ(j.at("cores").back().get<Partition>(), maximal_core(4, 5));
}

TEST(CliEnumerate, ExitCodes) {
    EXPECT_EQ(run("enumerate 4 6").exit_code, 3);
    EXPECT_EQ(run("enumerate 7").exit_code, 3);
    EXPECT_EQ(run("enumerate 1 3").exit_code, 2);
    EXPECT_EQ(run("enumerate x").exit_code, 2);
    EXPECT_EQ(run("enumerate").exit_code, 2);
    EXPECT_EQ(run("enumerate 8 9", "COREKIT_MAX_ENUM_BOUND=100").exit_code, 2);
    EXPECT_EQ(run("enumerate 7 8", "COREKIT_MAX_ENUM_BOUND=200").exit_code, 0);
}

TEST(CliCatalan, Json) {
    const Json j = Json::parse(run("catalan --k 4").out);
    EXPECT_EQ(j.at("kappa_triple").dump(), "[9,9,4,4,4,4,1,1,1,1,1,1]");
}
