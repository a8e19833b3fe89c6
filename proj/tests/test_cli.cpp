#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end checks through the installed binary.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string out_file = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                                   : "/tmp") +
                                 "/pcrp_cli_out.txt";
    const std::string cmd =
        std::string(PCRP_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    std::ifstream in(out_file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
}

std::string temp_path(const std::string& name) {
    return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/" + name;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    std::string got;
    while (std::getline(in, got))
        if (got == line) return true;
    return false;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solving a chain reports the single-path stage") {
    auto inst = temp_path("chain.pcrp");
    write_file(inst, "pcrp 1\nn 4 s 0 t 3\na 0 1\na 1 2\na 2 3\np 1 2\n");
    auto r = run_cli("solve " + inst);
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "stage 1pcrp"));
    CHECK(has_line(r.out, "k 1"));
    CHECK(has_line(r.out, "verified 1"));
}

TEST_CASE("three branches fall through to the greedy stage") {
    auto inst = temp_path("branches.pcrp");
    write_file(inst,
               "pcrp 1\nn 5 s 0 t 4\na 0 1\na 0 2\na 0 3\na 1 4\na 2 4\na 3 4\n"
               "p 0 1\np 0 2\np 0 3\n");
    auto r = run_cli("solve " + inst);
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "stage greedy"));
    CHECK(has_line(r.out, "k 3"));
    auto exact = run_cli("solve --exact " + inst);
    CHECK(has_line(exact.out, "stage exact"));
    CHECK(has_line(exact.out, "k 3"));
}

TEST_CASE("an uncoverable pair is reported infeasible with exit code two") {
    auto inst = temp_path("unc.pcrp");
    write_file(inst, "pcrp 1\nn 4 s 0 t 3\na 0 1\na 0 2\na 1 3\na 2 3\np 1 2\n");
    auto r = run_cli("solve " + inst);
    CHECK(r.exit_code == 2);
    CHECK(has_line(r.out, "infeasible 1"));
    CHECK(has_line(r.out, "reason uncoverable pair (1,2)"));
}

TEST_CASE("cyclic inputs are condensed before solving") {
    auto inst = temp_path("cyclic.pcrp");
    write_file(inst, "pcrp 1\nn 4 s 0 t 3\na 0 1\na 1 2\na 2 1\na 2 3\np 1 2\n");
    auto r = run_cli("solve " + inst);
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "scc_collapsed 1"));
    CHECK(has_line(r.out, "collapsed_vertex_count 3"));
    CHECK(has_line(r.out, "pairs_dropped_by_collapse 1"));
}

TEST_CASE("solutions written by solve pass verify") {
    auto inst = temp_path("diamond.pcrp");
    auto sol = temp_path("diamond.sol");
    write_file(inst, "pcrp 1\nn 4 s 0 t 3\na 0 1\na 0 2\na 1 3\na 2 3\n");
    auto solved = run_cli("solve " + inst + " -o " + sol);
    CHECK(solved.exit_code == 0);
    auto verified = run_cli("verify " + inst + " " + sol);
    CHECK(verified.exit_code == 0);
    CHECK(has_line(verified.out, "valid 1"));
}

TEST_CASE("verify rejects covers with missing pieces") {
    auto inst = temp_path("diamond2.pcrp");
    auto sol = temp_path("diamond2.sol");
    write_file(inst, "pcrp 1\nn 4 s 0 t 3\na 0 1\na 0 2\na 1 3\na 2 3\n");
    write_file(sol, "k 1\n0 1 3\n");
    auto r = run_cli("verify " + inst + " " + sol);
    CHECK(r.exit_code == 2);
    CHECK(has_line(r.out, "valid 0"));
    CHECK(has_line(r.out, "uncovered_vertices 2"));
    auto pairs_only = run_cli("verify --mode pairs-only " + inst + " " + sol);
    CHECK(pairs_only.exit_code == 0);
}

TEST_CASE("maxrpsp reports the dp figures and a witness on demand") {
    auto inst = temp_path("chain6.pcrp");
    write_file(inst,
               "pcrp 1\nn 6 s 0 t 5\na 0 1\na 1 2\na 2 3\na 3 4\na 4 5\n"
               "p 1 3\np 2 4\np 1 4\n");
    auto r = run_cli("maxrpsp --emit-witness " + inst);
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "method dp"));
    CHECK(has_line(r.out, "optimum 3"));
    CHECK(has_line(r.out, "p 2"));
    CHECK(has_line(r.out, "covered 1 3"));
    CHECK(has_line(r.out, "k 1"));
    CHECK(has_line(r.out, "0 1 2 3 4 5"));
    auto brute = run_cli("maxrpsp --brute " + inst);
    CHECK(has_line(brute.out, "optimum 3"));
}

TEST_CASE("stats summarizes the overlap structure") {
    auto inst = temp_path("stats.pcrp");
    write_file(inst,
               "pcrp 1\nn 6 s 0 t 5\na 0 1\na 1 2\na 2 3\na 3 4\na 4 5\n"
               "p 1 3\np 2 4\np 1 4\n");
    auto r = run_cli("stats " + inst);
    CHECK(r.exit_code == 0);
    CHECK(has_line(r.out, "n 6"));
    CHECK(has_line(r.out, "pairs 3"));
    CHECK(has_line(r.out, "p 2"));
    CHECK(has_line(r.out, "alternated 1"));
    CHECK(has_line(r.out, "nested 1"));
}

TEST_CASE("generation is deterministic per seed and solvable end to end") {
    auto a = temp_path("gen_a.pcrp");
    auto ra = run_cli("gen random -o " + a + " --seed 42 --n 12 --pairs 5");
    CHECK(ra.exit_code == 0);
    std::string first = read_file(a);
    auto rb = run_cli("gen random -o " + a + " --seed 42 --n 12 --pairs 5");
    CHECK(ra.out == rb.out);
    CHECK(read_file(a) == first);
    CHECK(first.rfind("pcrp 1\n", 0) == 0);

    auto sol = temp_path("gen_a.sol");
    auto solved = run_cli("solve " + a + " -o " + sol);
    CHECK(solved.exit_code == 0);
    CHECK(run_cli("verify " + a + " " + sol).exit_code == 0);
}

TEST_CASE("reduction generators write instances plus sidecar maps") {
    auto out = temp_path("gen3c.pcrp");
    auto r = run_cli("gen from-3col -o " + out + " --gn 4 --gp 0.6 --seed 9");
    CHECK(r.exit_code == 0);
    CHECK(read_file(out + ".map").rfind("map3c 1\n", 0) == 0);

    auto outk = temp_path("genclq.pcrp");
    auto rk = run_cli("gen from-clique -o " + outk + " --gn 5 --gp 0.6 --copies 3 --seed 9");
    CHECK(rk.exit_code == 0);
    CHECK(read_file(outk + ".map").rfind("mapclq 1\n", 0) == 0);
    auto solved = run_cli("maxrpsp " + outk);
    CHECK(solved.exit_code == 0);
}

TEST_CASE("json reports carry the same facts") {
    auto inst = temp_path("json.pcrp");
    write_file(inst, "pcrp 1\nn 4 s 0 t 3\na 0 1\na 1 2\na 2 3\np 1 2\n");
    auto r = run_cli("--json solve " + inst);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"stage\": \"1pcrp\"") != std::string::npos);
    CHECK(r.out.find("\"k\": 1") != std::string::npos);
}

TEST_CASE("parse errors exit with code one") {
    auto inst = temp_path("broken.pcrp");
    write_file(inst, "pcrp 1\nn 3 s 0 t 2\na 0 9\n");
    CHECK(run_cli("solve " + inst).exit_code == 1);
}

}  // TEST_SUITE
