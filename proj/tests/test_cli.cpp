// End-to-end checks of the CLI: exit codes (0 pass / 1 counterexample or
// tolerance failure / 2 usage), pinned output strings, and byte-determinism.
// Takes the binary path as argv[1].

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& binary, const std::string& args) {
    std::string cmd = binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "[FAIL] " << what << "\n";
        ++failures;
    } else {
        std::cout << "[ok] " << what << "\n";
    }
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <mhslab binary>\n";
        return 2;
    }
    const std::string bin = argv[1];

    auto r = run(bin, "verify i5 --n 1..5");
    expect(r.exit_code == 0 && contains(r.out, "all passed"), "verify i5 sweep exits 0");

    r = run(bin, "verify i6 --n 3 --d 1");
    expect(r.exit_code == 2, "verify i6 with d=1 is a usage error (exit 2)");

    r = run(bin, "verify i9 --n 1..3");
    expect(r.exit_code == 2, "unknown tag exits 2");

    r = run(bin, "verify i5 --n 1..500");
    expect(r.exit_code == 2, "desk-scale cap on n enforced");

    r = run(bin, "verify c3 --n 1..6 --a 1..2 --b 1..2 --jobs 4");
    expect(r.exit_code == 0, "parallel c3 sweep exits 0");

    // byte-determinism modulo timing
    auto r1 = run(bin, "verify i7 --n 1..4 --r 1..2 --format json --no-timing");
    auto r2 = run(bin, "verify i7 --n 1..4 --r 1..2 --format json --no-timing");
    expect(r1.exit_code == 0 && r1.out == r2.out, "json output is byte-identical across runs");
    expect(contains(r1.out, "\"identity\":\"i7\""), "json carries the identity tag");

    auto s1 = run(bin, "verify i5 --n 1..20 --sample 3 --seed 11 --format json --no-timing");
    auto s2 = run(bin, "verify i5 --n 1..20 --sample 3 --seed 11 --format json --no-timing");
    expect(s1.exit_code == 0 && s1.out == s2.out, "seeded sampling is reproducible");

    r = run(bin, "verify i5 --n 1..5 --format tsv --no-timing");
    expect(r.exit_code == 0 && first_line(r.out) == "identity\tparams\tlhs\trhs\tequal\telapsed_ms",
           "tsv header");

    r = run(bin, "verify i5 --n 1..5 --oracle");
    expect(r.exit_code == 0, "oracle engine sweep exits 0");

    r = run(bin, "congruence i --p 7..30 --m 1 --n 3");
    expect(r.exit_code == 0, "congruence i sweep exits 0");

    r = run(bin, "congruence thm4-half --p 7..50 --a 1 --b 1");
    expect(r.exit_code == 0, "thm4-half sweep exits 0");

    r = run(bin, "congruence iii --p 5 --m 2 --n 3");
    expect(r.exit_code == 2, "prime below the congruence bound exits 2");

    r = run(bin, "congruence iii --p 5 --m 1 --n 2");
    expect(r.exit_code == 0, "p = 5 satisfies the bound for weight 3");

    r = run(bin, "series gf2 --n 0..0 --r 1 --d 1");
    expect(r.exit_code == 0 && contains(r.out, "lhs = 0"), "empty gf2 sum is 0 = 0");

    r = run(bin, "series gf2 --n 1..4 --r 1..2 --d 1..2 --format json");
    expect(r.exit_code == 0 && contains(r.out, "\"check\":\"gf2\""), "gf2 json sweep");

    r = run(bin, "series thm1 --n 1..3 --r 1..2 --d 1..2");
    expect(r.exit_code == 0, "thm1 sweep exits 0");

    r = run(bin, "series specializations --n 1..3 --a 1..1 --b 1..2");
    expect(r.exit_code == 0, "specializations sweep exits 0");

    r = run(bin, "zeta r-infty --a 1 --b 2");
    expect(r.exit_code == 0 && first_line(r.out) == "31/8*zeta(5) - 7/4*zeta(3)*zeta(2)",
           "r-infty (1,2) prints the pinned closed form");

    r = run(bin, "zeta r-infty --a 2 --b 2");
    expect(r.exit_code == 0 &&
               first_line(r.out) == "-635/64*zeta(7) + 49/16*zeta(3)*zeta(4) + 31/8*zeta(5)*zeta(2)",
           "r-infty (2,2) prints the pinned closed form");

    r = run(bin, "zeta r-infty --a 1 --b 1");
    expect(r.exit_code == 2, "r-infty with b=1 is rejected (divergent)");

    r = run(bin, "zeta euler --m -1 --n 1");
    expect(r.exit_code == 2, "divergent euler sum exits 2");

    r = run(bin, "zeta euler --m 2 --n -1 --tol 1e-25");
    expect(r.exit_code == 0 && contains(r.out, "closed form:"),
           "euler H(2,-1) matches its closed form at 1e-25");

    r = run(bin, "zeta r-infty --a 1 --b 2 --check-numeric --max-n 128 --tol 1e-30");
    expect(r.exit_code == 1, "impossible tolerance is a counterexample exit (1)");

    r = run(bin, "compositions \"(1,1,1,2)\"");
    expect(r.exit_code == 0 && contains(r.out, "count: 8") && contains(r.out, "(2,1,2)") &&
               contains(r.out, "(5)"),
           "compositions of (1,1,1,2)");

    r = run(bin, "compositions \"(3)\"");
    expect(r.exit_code == 0 && contains(r.out, "count: 1"), "single-part composition");

    r = run(bin, "compositions \"(1,-2)\"");
    expect(r.exit_code == 2, "negative entries rejected for compositions");

    r = run(bin, "compositions \"{2}^3\"");
    expect(r.exit_code == 0 && contains(r.out, "count: 4"), "repetition macro accepted");

    std::cout << (failures ? "CLI TESTS FAILED\n" : "CLI TESTS PASSED\n");
    return failures ? 1 : 0;
}
