// Drives the installed command-line binary end to end; the binary path
// arrives as argv[1] from the test harness.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int failures = 0;
std::string cli;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    FILE* p = popen((cli + " " + args + " 2>/dev/null").c_str(), "r");
    if (!p) {
        std::cerr << "popen failed\n";
        exit(1);
    }
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << "\n";
    }
}

void expect_contains(const RunResult& r, const std::string& needle, const std::string& what) {
    expect(r.out.find(needle) != std::string::npos, what + " (missing: " + needle + ")");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-binary>\n";
        return 1;
    }
    cli = argv[1];

    auto table = run("table1 --format csv");
    expect(table.exit_code == 0, "table1 exits 0");
    expect(table.out ==
               "quantity,n=1,n=2,n=3,n=4,n=5\n"
               "V,4,7,16,43,124\n"
               "varphi,1,3,108,8608032,8300560282271896633344\n"
               "theta,1,4,246,37340352,71022198720317181345792\n"
               "phi,1,3,480,155289960,601114712194856725217280\n"
               "tau,3,23,738,615514464,5030805301520123200352256\n",
           "table1 csv bytes");

    expect(run("table1 --format csv").out == table.out, "table1 deterministic");

    auto gen = run("generate --family apollonian --n 3 --format edgelist");
    expect(gen.exit_code == 0, "generate exits 0");
    expect_contains(gen, "# family=apollonian n=3 vertices=16", "generate header");

    auto genj = run("generate --family ext-hanoi --n 1 --format json");
    expect(genj.exit_code == 0, "generate json exits 0");
    expect_contains(genj, "\"vertices\": 4", "ext-hanoi n=1 is K4");

    expect(run("generate --family hanoi --n 0").exit_code == 2, "n=0 is a usage error");
    expect(run("generate --family nope --n 1").exit_code == 2, "bad family is a usage error");
    expect(run("frobnicate").exit_code == 2, "unknown subcommand is a usage error");

    auto solve = run("solve --family apollonian --n 3 --problem matching");
    expect(solve.exit_code == 0, "solve exits 0");
    expect_contains(solve, "\"size\":7", "A3 matching number");
    expect_contains(solve, "\"count\":\"738\"", "A3 matching count");

    auto cons = run("solve --family apollonian --n 3 --problem matching "
                    "--constraints X=cover,Y=vacate,Z=vacate");
    expect_contains(cons, "\"size\":5", "one-covered class size");
    expect_contains(cons, "\"count\":\"246\"", "one-covered class count");

    auto dom = run("solve --family ext-hanoi --n 2 --problem domination");
    expect_contains(dom, "\"size\":3", "S+_2 domination number");
    expect_contains(dom, "\"count\":\"22\"", "S+_2 MDS count");

    auto pc = run("solve --family ext-hanoi --n 3 --problem perfect-count");
    expect_contains(pc, "\"count\":\"48\"", "S+_3 perfect matchings");

    auto recur = run("recur --family apollonian --n 5 --problem matching");
    expect_contains(recur, "5030805301520123200352256", "recur reaches tau_5");

    auto growth = run("growth --max-m 7 --format csv");
    expect(growth.exit_code == 0, "growth exits 0");
    expect_contains(growth, "7,0.4300134222,0.4384279949,0.0084145727", "m=7 bracket row");

    auto wit = run("witness --family ext-hanoi --n 3 --what mds --k 4");
    expect(wit.exit_code == 0, "witness exits 0");
    expect_contains(wit, "\"vertices\":[5,7,11,15,19,21,27]", "the 7-vertex class");

    auto verify = run("verify --max-oracle-n 1");
    expect(verify.exit_code == 0, "verify exits 0");
    expect_contains(verify, "all checks passed", "verify summary");

    expect(run("verify --max-oracle-n 1 --inject-fault").exit_code == 1,
           "fault injection exits 1");

    if (failures == 0) {
        std::cout << "all cli checks passed\n";
        return 0;
    }
    std::cerr << failures << " cli check(s) failed\n";
    return 1;
}
