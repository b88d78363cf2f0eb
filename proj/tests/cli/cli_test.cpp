// Runs the acsinv executable and checks exit codes and golden output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kTool = ACSINV_PATH;
const fs::path kGolden = GOLDEN_DIR;

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = kTool.string() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string g(const std::string& name) { return (kGolden / name).string(); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "acsinv_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

json golden_json(const std::string& name) { return json::parse(slurp(kGolden / name)); }

}  // namespace

TEST_CASE("check") {
    CHECK(run("check " + g("constant_n2.json")).status == 0);
    const Run bad = run("check " + g("identity_matrix_n1.json"));
    CHECK(bad.status == 1);
    CHECK(bad.out.find("[1][1] = 2") != std::string::npos);
    CHECK(run("check " + g("gauge_n2_d2_s7.json")).status == 0);
    CHECK(run("check " + g("pullback_n2_d3_s5.json")).status == 0);
    CHECK(run("check " + g("malformed.json")).status == 2);
    CHECK(run("check " + g("bad_arity_n1.json")).status == 2);
    CHECK(run("check " + g("bad_variable_n1.json")).status == 2);
    CHECK(run("check " + g("does_not_exist.json")).status == 2);
    CHECK(run("").status == 2);
}

TEST_CASE("jet") {
    const Run r = run("jet " + g("gauge_n2_d2_s7.json") + " --at 1,-1,1/2,2");
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out) == golden_json("gauge_n2_d2_s7.jet.json"));
    CHECK(json::parse(r.out)["in_j1pi"] == true);
    CHECK(run("jet " + g("gauge_n2_d2_s7.json") + " --at 1,2").status == 2);
    CHECK(run("jet " + g("gauge_n2_d2_s7.json") + " --at 1,a,2,3").status == 2);
}

TEST_CASE("omega and nijenhuis") {
    for (const std::string kind : {"omega", "nijenhuis"}) {
        const Run at = run(kind + " " + g("gauge_n2_d2_s7.json") + " --at 1,-1,1/2,2");
        REQUIRE(at.status == 0);
        CHECK(json::parse(at.out) == golden_json("gauge_n2_d2_s7." + kind + "_at.json"));

        const Run sym = run(kind + " " + g("gauge_n2_d2_s7.json") + " --symbolic");
        REQUIRE(sym.status == 0);
        CHECK(json::parse(sym.out) == golden_json("gauge_n2_d2_s7." + kind + "_symbolic.json"));

        const Run flat = run(kind + " " + g("constant_n2.json") + " --at 3,1/2,-1,0");
        CHECK(json::parse(flat.out)["coefficients"].empty());

        CHECK(run(kind + " " + g("identity_matrix_n1.json") + " --at 0,0").status == 1);
        CHECK(run(kind + " " + g("gauge_n2_d2_s7.json")).status == 2);
        CHECK(run(kind + " " + g("gauge_n2_d2_s7.json") + " --at 1,2 ").status == 2);
    }
    const Run nij = run("nijenhuis " + g("pullback_n2_d3_s5.json") + " --symbolic");
    CHECK(json::parse(nij.out)["identically_zero"] == true);
    // the pulled-back flat structure still has nonzero omega
    const Run om = run("omega " + g("pullback_n2_d3_s5.json") + " --symbolic");
    CHECK(json::parse(om.out) == golden_json("pullback_n2_d3_s5.omega_symbolic.json"));
    CHECK(json::parse(om.out)["identically_zero"] == false);
}

TEST_CASE("spencer") {
    const Run one = run("spencer --n 1");
    REQUIRE(one.status == 0);
    CHECK(one.out.find("dim g: 2\n") != std::string::npos);
    CHECK(one.out.find("dim g1: 2\n") != std::string::npos);
    CHECK(one.out.find("dim H02: 0\n") != std::string::npos);
    const Run two = run("spencer --n 2");
    CHECK(two.out.find("dim g: 8\n") != std::string::npos);
    CHECK(two.out.find("dim H02: 4\n") != std::string::npos);
    CHECK(run("spencer --n 3").out == slurp(kGolden / "spencer_n3.txt"));

    const Run at = run("spencer --n 2 --theta0 " + g("gauge_n2_d2_s7.json") + " --at 1,-1,1/2,2");
    CHECK(at.status == 0);
    CHECK(at.out == two.out);
    CHECK(run("spencer --n 1 --theta0 " + g("identity_matrix_n1.json") + " --at 0,0").status == 2);
    CHECK(run("spencer --n 1 --theta0 " + g("gauge_n2_d2_s7.json") + " --at 0,0").status == 2);
    CHECK(run("spencer --n 0").status == 2);
}

TEST_CASE("naturality") {
    const std::string s = g("gauge_n2_d2_s7.json");
    CHECK(run("naturality " + s + " --diffeo " + g("identity_diffeo_n2.json") + " --at 1,2,3,4").status == 0);
    CHECK(run("naturality " + s + " --diffeo " + g("corrupted_inverse_n2.json") + " --at 1,2,3,4").status == 2);
    CHECK(run("naturality " + s + " --diffeo " + g("no_inverse_n2.json") + " --at 1,2,3,4").status == 2);
    // omega does not transport under a quadratic shear
    CHECK(run("naturality " + s + " --diffeo " + g("pullback_n2_d3_s5.diffeo.json") + " --at 1,2,3,4").status == 1);
    CHECK(run("naturality " + g("constant_n2.json") + " --diffeo " + g("pullback_n2_d3_s5.diffeo.json") +
              " --at 1,2,3,4")
              .status == 1);
}

TEST_CASE("integrability") {
    const Run gauge = run("integrability " + g("gauge_n2_d2_s7.json") + " --samples 4 --seed 3");
    CHECK(gauge.status == 0);
    CHECK(json::parse(gauge.out) == golden_json("gauge_n2_d2_s7.report.json"));

    const Run flat = run("integrability " + g("constant_n2.json") + " --samples 2 --seed 1");
    CHECK(flat.status == 0);
    CHECK(json::parse(flat.out)["omega_identically_zero"] == true);
    CHECK(json::parse(flat.out)["nijenhuis_identically_zero"] == true);

    const Run pulled = run("integrability " + g("pullback_n2_d3_s5.json") + " --samples 4 --seed 3");
    CHECK(pulled.status == 1);
    CHECK(json::parse(pulled.out) == golden_json("pullback_n2_d3_s5.report.json"));

    CHECK(run("integrability " + g("gauge_n2_d2_s7.json") + " --samples 0").status == 2);
    CHECK(run("integrability " + g("identity_matrix_n1.json")).status == 2);

    const fs::path out = scratch("report.json");
    CHECK(run("integrability " + g("gauge_n2_d2_s7.json") + " --samples 4 --seed 3 --out " + out.string()).status == 0);
    CHECK(slurp(out) == slurp(kGolden / "gauge_n2_d2_s7.report.json"));
}

TEST_CASE("gen") {
    const Run c = run("gen --kind constant --n 2");
    REQUIRE(c.status == 0);
    CHECK(json::parse(c.out) == golden_json("constant_n2.json"));

    const fs::path a = scratch("gauge_a.json"), b = scratch("gauge_b.json");
    CHECK(run("gen --kind gauge --n 2 --degree 2 --seed 7 --out " + a.string()).status == 0);
    CHECK(run("gen --kind gauge --n 2 --degree 2 --seed 7 --out " + b.string()).status == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) == slurp(kGolden / "gauge_n2_d2_s7.json"));
    CHECK(run("check " + a.string()).status == 0);

    const fs::path s = scratch("pull.json"), d = scratch("pull.diffeo.json");
    CHECK(run("gen --kind pullback --n 2 --degree 3 --seed 5 --out " + s.string() + " --diffeo-out " + d.string())
              .status == 0);
    CHECK(slurp(s) == slurp(kGolden / "pullback_n2_d3_s5.json"));
    CHECK(slurp(d) == slurp(kGolden / "pullback_n2_d3_s5.diffeo.json"));
    CHECK(run("check " + s.string()).status == 0);

    CHECK(run("gen --kind spiral --n 2").status == 2);
    CHECK(run("gen --kind gauge --n 0").status == 2);
}
