#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(TFSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    const int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

fs::path scratch_dir() {
    auto d = fs::temp_directory_path() / ("tfspec_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("run writes the CSV to stdout") {
    const auto r = run("run --case adv_jump --alpha1 0.6 --ns 8,16,32");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("case,alpha1,alpha2,d,lambda,N,l2_error,rate\r\n", 0) == 0);
    CHECK(count_lines(r.out) == 4);
    CHECK(r.out.find("adv_jump,0.59999999999999998,0,0,1,32,") != std::string::npos);
}

TEST_CASE("config file keys are overridden by flags") {
    const auto dir = scratch_dir();
    const auto cfg = dir / "cfg.json", csv = dir / "out.csv", svg = dir / "out.svg";
    std::ofstream(cfg) << R"({"case": "diff_ml_poly", "alpha1": 1.5, "alpha2": 1.1, "d": -1, "ns": [8, 16], "lambda": 0.5})";
    const auto r = run("run --config " + cfg.string() + " --ns 8,16,24 --lambda 2 --csv " + csv.string() + " --svg " +
                       svg.string());
    CHECK(r.status == 0);
    const auto text = slurp(csv);
    CHECK(count_lines(text) == 4);
    CHECK(text.find("diff_ml_poly,1.5,1.1000000000000001,-1,2,24,") != std::string::npos);
    CHECK(slurp(svg).find("<svg") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("sweep emits one block per alpha1") {
    const auto r = run("sweep --case adv_h3 --alpha1-list 0.3,0.7 --ns 8,16");
    CHECK(r.status == 0);
    CHECK(count_lines(r.out) == 5);
}

TEST_CASE("bad input exits with status 2") {
    CHECK(run("run --case nonsense --alpha1 0.5").status == 2);
    CHECK(run("run --case adv_jump --alpha1 1.5").status == 2);
}

TEST_CASE("verify reports its status") {
    const auto r = run("verify --only 5");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS  C05") != std::string::npos);
}
