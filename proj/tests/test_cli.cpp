#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef LAMREP_CLI_PATH
#define LAMREP_CLI_PATH "lamrep"
#endif

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(LAMREP_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify 5 5 --format csv has 87 rows") {
    auto r = run_cli("classify 5 5 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.out) == 88);  // header + 87 entries
}

TEST_CASE("stratum reports h, dim, candidacy") {
    auto r = run_cli("stratum --m 5 --n 4 --p 4,3,1 --q 4,2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"h\": 10") != std::string::npos);
    CHECK(r.out.find("\"dim\": 82") != std::string::npos);
    CHECK(r.out.find("\"candidate\": false") != std::string::npos);

    auto c = run_cli("stratum --m 5 --n 4 --p 5,3,1 --q 4,2");
    CHECK(c.out.find("\"candidate\": true") != std::string::npos);
}

TEST_CASE("local --loops 2") {
    auto r = run_cli("local --loops 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"tangent\": 3") != std::string::npos);
    CHECK(r.out.find("\"orbit\": 2") != std::string::npos);
    CHECK(r.out.find("\"quotient\": 1") != std::string::npos);
    CHECK(r.out.find("\"componentDim\": 3") != std::string::npos);
    CHECK(r.out.find("\"denseOrbit\": false") != std::string::npos);
}

TEST_CASE("identical argv produce byte-identical output") {
    auto a = run_cli("classify 4 4 --certify --dedup");
    auto b = run_cli("classify 4 4 --certify --dedup");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto s1 = run_cli("sample --m 4 --n 4 --p 4,1 --q 3 --field fp:10007 --seed 9 --count 3");
    auto s2 = run_cli("sample --m 4 --n 4 --p 4,1 --q 3 --field fp:10007 --seed 9 --count 3");
    CHECK(s1.out == s2.out);
    CHECK(s1.out.find("\"seed\": 9") != std::string::npos);
    auto s3 = run_cli("sample --m 4 --n 4 --p 4,1 --q 3 --field fp:10007 --seed 10 --count 3");
    CHECK(s1.out != s3.out);
}

TEST_CASE("sample | reduce pipeline") {
    const std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
    const std::string sample_path = dir + "/lamrep_cli_sample.json";
    auto s = run_cli("sample --m 4 --n 4 --p 4,1 --q 3,2 --field fp:10007 --seed 5 --count 1 --out " +
                     sample_path);
    CHECK(s.exit_code == 0);

    // pull the single sample out of the wrapper document
    std::ifstream is(sample_path);
    REQUIRE(is.good());
    std::string doc((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    auto pos = doc.find("\"samples\"");
    REQUIRE(pos != std::string::npos);
    const std::string inner = doc.substr(doc.find('{', pos), doc.rfind('}') - doc.find('{', pos));
    const std::string input_path = dir + "/lamrep_cli_input.json";
    std::ofstream os(input_path);
    os << inner;
    os.close();

    auto r = run_cli("reduce --input " + input_path + " --seed 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"status\": \"ok\"") != std::string::npos);
    CHECK(r.out.find("\"replay_ok\": true") != std::string::npos);
    CHECK(r.out.find("\"seed\": 1") != std::string::npos);
}

TEST_CASE("endo and indec on a small module") {
    const std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
    const std::string path = dir + "/lamrep_cli_triple.json";
    std::ofstream os(path);
    os << R"({"m":2,"n":2,"A":[["0"]],"B":[["0"]],"C":[["1"]],"field":{"kind":"Q"}})";
    os.close();
    auto e = run_cli("endo --input " + path);
    CHECK(e.exit_code == 0);
    CHECK(e.out.find("\"dim\": 1") != std::string::npos);
    CHECK(e.out.find("\"orbit_dim\": 1") != std::string::npos);
    auto i = run_cli("indec --input " + path);
    CHECK(i.exit_code == 0);
    CHECK(i.out.find("indecomposable") != std::string::npos);
}

TEST_CASE("indec requires rationals") {
    const std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
    const std::string path = dir + "/lamrep_cli_fp_triple.json";
    std::ofstream os(path);
    os << R"({"m":2,"n":2,"A":[[0]],"B":[[0]],"C":[[1]],"field":{"kind":"Fp","p":10007}})";
    os.close();
    auto e = run_cli("endo --input " + path);  // endo works over Fp, locality unknown
    CHECK(e.exit_code == 0);
    CHECK(e.out.find("\"is_local\": null") != std::string::npos);
    CHECK(run_cli("indec --input " + path).exit_code == 1);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("stratum --m 5 --n 4 --p 6,1 --q 2").exit_code == 1);  // part exceeds bound
    CHECK(run_cli("nonsense").exit_code != 0);
    CHECK(run_cli("reduce --input /nonexistent.json").exit_code == 1);
}

}  // TEST_SUITE
