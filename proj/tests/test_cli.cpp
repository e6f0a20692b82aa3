#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(MCT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int rc = pclose(pipe);
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::filesystem::path tmp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

bool contains_line(const std::string& text, const std::string& line) {
    return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

} // namespace

TEST_CASE("construct then verify round trip exits 0") {
    auto file = tmp_file("mct_cli_pert10.mct");
    CliResult c = run_cli("construct --type perturbed --n 10 -o " + file.string());
    CHECK(c.exit_code == 0);
    CHECK(contains_line(c.out, "k 4"));

    CliResult v = run_cli("verify " + file.string());
    CHECK(v.exit_code == 0);
    CHECK(contains_line(v.out, "valid 1"));
    CHECK(contains_line(v.out, "multicolored_triangle none"));
    std::filesystem::remove(file);
}

TEST_CASE("verify flags a multicolored triangle with exit 1") {
    auto file = tmp_file("mct_cli_witness.mct");
    std::ofstream(file) << "mct 1\nn 14\ncycle 0 1 5 6 7\ncycle 1 2 8 9 10\n"
                           "cycle 2 0 11 12 13\n";
    CliResult v = run_cli("verify " + file.string());
    CHECK(v.exit_code == 1);
    CHECK(contains_line(v.out, "valid 0"));
    CHECK(contains_line(v.out, "multicolored_triangle 0 1 2"));
    std::filesystem::remove(file);
}

TEST_CASE("syntax errors exit 2, semantic violations exit 1") {
    auto file = tmp_file("mct_cli_bad.mct");
    std::ofstream(file) << "mct 1\nn 5\ncycle 0 1 2 3\n";
    CHECK(run_cli("verify " + file.string()).exit_code == 2);

    std::ofstream(file) << "mct 1\nn 5\ncycle 0 1 2 3 4\ncycle 0 1 3 2 4\n";
    CHECK(run_cli("verify " + file.string()).exit_code == 1);

    CHECK(run_cli("verify /nonexistent/file.mct").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("solve").exit_code == 2); // missing --n
    std::filesystem::remove(file);
}

TEST_CASE("solve with oracle prints agreement") {
    CliResult r = run_cli("solve --n 5 --oracle");
    CHECK(r.exit_code == 0);
    CHECK(contains_line(r.out, "k_star 2"));
    CHECK(contains_line(r.out, "oracle 2"));
    CHECK(contains_line(r.out, "oracle_agrees 1"));
    CHECK(contains_line(r.out, "cycle 0 1 2 3 4"));
}

TEST_CASE("solve output is byte-identical across worker counts") {
    CliResult base = run_cli("solve --n 6 --jobs 1");
    CHECK(base.exit_code == 0);
    for (int jobs : {2, 8}) {
        CliResult r = run_cli("solve --n 6 --jobs " + std::to_string(jobs));
        CHECK(r.exit_code == 0);
        CHECK(r.out == base.out);
    }
}

TEST_CASE("analyze a constructed certificate") {
    auto file = tmp_file("mct_cli_analyze.mct");
    REQUIRE(run_cli("construct --type perturbed --n 10 -o " + file.string()).exit_code == 0);
    CliResult a = run_cli("analyze " + file.string());
    CHECK(a.exit_code == 0);
    CHECK(contains_line(a.out, "m_size 4"));
    CHECK(contains_line(a.out, "structured_total 16"));
    CHECK(contains_line(a.out, "l_is_matching 1"));
    CHECK(contains_line(a.out, "sum_s_sq 0"));

    CliResult j = run_cli("analyze --json " + file.string());
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["m_size"] == 4);
    CHECK(parsed["partition"] == "file");
    std::filesystem::remove(file);
}

TEST_CASE("analyze without a partition still reports the global quantities") {
    auto file = tmp_file("mct_cli_k5star.mct");
    REQUIRE(run_cli("construct --type k5star --n 9 -o " + file.string()).exit_code == 0);
    CliResult a = run_cli("analyze " + file.string());
    CHECK(a.exit_code == 0);
    CHECK(contains_line(a.out, "partition none"));
    // e = 20 and e(B_v) = 8 both at the hub and at blade vertices
    CHECK(contains_line(a.out, "vertex_split_bound 12"));

    CliResult f = run_cli("analyze --find-partition " + file.string());
    CHECK(f.exit_code == 0);
    CHECK(contains_line(f.out, "partition search"));
    std::filesystem::remove(file);
}

TEST_CASE("bounds table output") {
    CliResult b = run_cli("bounds --from 10 --to 13");
    CHECK(b.exit_code == 0);
    CHECK(contains_line(b.out, "row 10 2 0 4 0 26/5 16 1 1 1"));
    CHECK(contains_line(b.out, "row 13 2 3 6 39/25 208/25 98/5 1 1 1"));
    CHECK(contains_line(b.out, "all_ok 1"));

    CliResult j = run_cli("bounds --from 10 --to 10 --json");
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["row"][0]["upper_main"] == "26/5");
}

TEST_CASE("construct to stdout emits a parseable certificate") {
    CliResult c = run_cli("construct --type blowup --n 10");
    CHECK(c.exit_code == 0);
    CHECK(c.out.rfind("mct 1\n", 0) == 0);
    CHECK(contains_line(c.out, "n 10"));
}
