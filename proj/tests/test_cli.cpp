#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <algpencil/io.hpp>

using namespace algpencil;

namespace {

std::string cli_path() {
    const char* p = std::getenv("ALGPENCIL_CLI");
    REQUIRE_MESSAGE(p != nullptr, "ALGPENCIL_CLI must point at the built binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string tmp_file(const std::string& name, const std::string& contents) {
    std::string path = "cli_test_" + name;
    std::ofstream f(path);
    f << contents;
    return path;
}

std::string write_registry(const std::string& name, const std::string& file) {
    RunResult r = run("registry " + name + " --out " + file);
    REQUIRE(r.exit_code == 0);
    return file;
}

}  // namespace

TEST_CASE("serialization round trips every registry algebra") {
    for (const char* name :
         {"L1", "L2", "T2", "D", "C2", "Z2", "M2", "T3", "dsum(L1,L1)", "dsum(T2,D)"}) {
        Algebra a = registry(name);
        Algebra back = algebra_from_json(algebra_to_json(a));
        CAPTURE(name);
        CHECK(back.dim() == a.dim());
        CHECK(back.basis_names() == a.basis_names());
        CHECK(back.table() == a.table());
        CHECK(back.unity_index() == a.unity_index());
    }
}

TEST_CASE("cmd_check exit codes and witnesses") {
    std::string t2 = write_registry("T2", "cli_t2.json");
    RunResult ok = run("check " + t2);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("unity: 1") != std::string::npos);

    // perturbed T2: y*x loses its -1 term
    Json doc = load_json_file(t2);
    doc["table"][2][1] = Json::array({0, 1, 1});
    std::string bad = tmp_file("bad_t2.json", doc.dump());
    RunResult violated = run("check " + bad);
    CHECK(violated.exit_code == 2);
    CHECK(violated.output.find("(y,x,x)") != std::string::npos);
    CHECK(violated.output.find("-x") != std::string::npos);

    std::string truncated = tmp_file("truncated.json", "{\"dim\": 3, \"basis\"");
    RunResult parse_error = run("check " + truncated);
    CHECK(parse_error.exit_code == 1);

    RunResult missing = run("check does_not_exist.json");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("cmd_analyze output and degenerate exit") {
    std::string t2 = write_registry("T2", "cli_t2.json");
    RunResult r = run("analyze " + t2 + " --functional 1,2,4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("-25") != std::string::npos);
    CHECK(r.output.find("lie index") != std::string::npos);
    CHECK(r.output.find("PASS") != std::string::npos);

    std::string l1 = write_registry("L1", "cli_l1.json");
    RunResult rl = run("analyze " + l1 + " --functional 1,1");
    CHECK(rl.exit_code == 0);
    CHECK(rl.output.find("-lambda*mu") != std::string::npos);
    CHECK(rl.output.find("lie index (seeded, 8 trials): 0") != std::string::npos);

    std::string z2 = write_registry("Z2", "cli_z2.json");
    RunResult rz = run("analyze " + z2);
    CHECK(rz.exit_code == 3);
}

TEST_CASE("cmd_analyze machine reports are deterministic") {
    std::string t2 = write_registry("T2", "cli_t2.json");
    RunResult a = run("analyze " + t2 + " --seed 5 --json");
    RunResult b = run("analyze " + t2 + " --seed 5 --json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    RunResult c = run("analyze " + t2 + " --seed 6 --json");
    CHECK(c.exit_code == 0);
    CHECK(a.output != c.output);  // different seed, different sampled functional
}

TEST_CASE("cmd_canon") {
    std::string l2 = write_registry("L2", "cli_l2.json");
    RunResult r = run("canon " + l2);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("L2") != std::string::npos);

    std::string t2 = write_registry("T2", "cli_t2.json");
    RunResult rt = run("canon " + t2);
    CHECK(rt.exit_code == 0);
    CHECK(rt.output.find("T2_UPPER_TRIANGULAR") != std::string::npos);

    std::string m2 = write_registry("M2", "cli_m2.json");
    RunResult rm = run("canon " + m2);
    CHECK(rm.exit_code == 4);
}

TEST_CASE("cmd_split and cmd_build") {
    std::string t2 = write_registry("T2", "cli_t2.json");
    RunResult rs = run("split " + t2 + " --functional 1,0,0");
    CHECK(rs.exit_code == 0);
    CHECK(rs.output.find("rank1_eqn: PASS") != std::string::npos);

    std::string h = tmp_file("h.json", R"({"dim":1,"basis":["x"],"table":[[[1]]]})");
    std::string hp = tmp_file("hp.json", R"({"dim":1,"basis":["y"],"table":[[[1]]]})");
    std::string pairing = tmp_file("pairing.json", "[[1]]");
    RunResult built = run("build " + h + " " + hp + " " + pairing + " --json");
    CHECK(built.exit_code == 0);
    RunResult reg = run("registry T2 --json");
    CHECK(built.output == reg.output);  // byte-identical document

    std::string hp0 = tmp_file("hp0.json", R"({"dim":1,"basis":["y"],"table":[[[0]]]})");
    RunResult broken = run("build " + h + " " + hp0 + " " + pairing);
    CHECK(broken.exit_code == 2);
    CHECK(broken.output.find("rank1_eqn") != std::string::npos);

    // split on a non-index-1 input surfaces NotIndexOne as a violation
    std::string m2 = write_registry("M2", "cli_m2.json");
    RunResult rm = run("split " + m2 + " --functional 1,0,0,2");
    CHECK(rm.exit_code == 2);
}

TEST_CASE("cmd_registry unknown name") {
    RunResult r = run("registry NOPE");
    CHECK(r.exit_code == 4);
}
