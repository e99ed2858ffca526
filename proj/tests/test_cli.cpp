#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef NCMI_CLI_PATH
#error "NCMI_CLI_PATH must point at the ncmi binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(NCMI_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_moments_file(const std::string& name, const std::string& body) {
    const std::string path = "/tmp/" + name;
    std::ofstream f(path);
    f << body;
    return path;
}

}  // namespace

TEST_CASE("span command reproduces the expansion value") {
    const std::string sc =
        write_moments_file("sc.json", R"({"phi": [[0,0],[1,0]]})");
    const RunResult r = run_cli("span --alpha 2+0i --beta 3+0i --b-mean 1 --b-second 2 "
                                "--a-moments " + sc + " --k 2");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "span");
    CHECK(j["rows"][1]["k"] == 2);
    CHECK(j["rows"][1]["value"][0].get<double>() == doctest::Approx(31.0).epsilon(1e-12));
    CHECK(j["rows"][1]["value"][1].get<double>() == doctest::Approx(0.0));
    CHECK(j["pass"] == true);
}

TEST_CASE("complex arguments parse in RE+IMi form") {
    const RunResult r = run_cli("span --alpha 1.5-2i --beta 0+1i --b-mean 1 --b-second 2 "
                                "--a-law semicircle --k 2");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["params"]["alpha"][0] == 1.5);
    CHECK(j["params"]["alpha"][1] == -2.0);
    CHECK(j["params"]["beta"][0] == 0.0);
    CHECK(j["params"]["beta"][1] == 1.0);
}

TEST_CASE("malformed inputs exit with code 2") {
    CHECK(run_cli("span --alpha nope --b-mean 1 --b-second 2 --k 2").exit_code == 2);
    CHECK(run_cli("span --no-such-flag 1").exit_code == 2);
    CHECK(run_cli("no-such-command").exit_code == 2);
    const std::string bad = write_moments_file("bad.json", "{ not json");
    CHECK(run_cli("span --a-moments " + bad + " --k 2").exit_code == 2);
    // Horizon shorter than the requested order.
    const std::string shallow = write_moments_file("shallow.json", R"({"phi": [[0,0]]})");
    CHECK(run_cli("span --a-moments " + shallow + " --k 3").exit_code == 2);
}

TEST_CASE("verification commands pass at their stated tolerances") {
    CHECK(run_cli("oracle-check --trials 20 --kmax 6 --tol 1e-9 --seed 42").exit_code == 0);
    CHECK(run_cli("lift-check --trials 20 --kmax 6 --tol 1e-9 --seed 7").exit_code == 0);
    CHECK(run_cli("catalan-check --nmax 10").exit_code == 0);
}

TEST_CASE("an unattainable tolerance is a reported failure, not an error") {
    const RunResult r = run_cli("oracle-check --trials 5 --kmax 6 --tol 1e-30 --seed 42");
    CHECK(r.exit_code == 1);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == false);
}

TEST_CASE("csv output starts with the header row") {
    const RunResult r = run_cli("anticomm --b-mean 1 --b-second 2 --a-law semicircle "
                                "--k 2 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("k,value_re,value_im,eps_re,eps_im,std_error,prediction_re,"
                      "prediction_im,gap\n", 0) == 0);
}

TEST_CASE("wigner-limit records both readings when they differ") {
    const RunResult r = run_cli("wigner-limit --spec span --alpha 0+2i --m 1 --k 2");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["rows"][1]["value"][0] == 4.0);
    REQUIRE(j["params"].contains("statement_scaling"));
    CHECK(j["params"]["statement_scaling"][1] == 2.0);
}

TEST_CASE("general command reports the two-atom data") {
    const RunResult r = run_cli("general --b11 2 --b22 14 --b12 5 --bt1 1 --bt2 2 "
                                "--ct1 1 --ct2 1 --a-law semicircle --k 3");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["params"]["theta"][0] == 8.0);
    CHECK(j["params"]["zeta"][0].get<double>() ==
          doctest::Approx(std::sqrt(61.0)).epsilon(1e-12));
}

TEST_CASE("repeated seeded runs are byte-identical") {
    const std::string cmds[] = {
        "oracle-check --trials 10 --kmax 5 --seed 5",
        "rmt --spec t --k 2 --n 80 --n0 8 --samples 10 --seed 11",
        "span --alpha 1+1i --beta 2-1i --b-mean 0.5+0.25i --b-second 1 --a-law semicircle --k 5",
    };
    for (const std::string& cmd : cmds) {
        const RunResult first = run_cli(cmd);
        const RunResult second = run_cli(cmd);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.out == second.out);
        CHECK(!first.out.empty());
    }
}

TEST_CASE("small rmt run reports estimates against predictions") {
    const RunResult r =
        run_cli("rmt --spec t --k 2 --n 100 --n0 5 --samples 20 --seed 3");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][1]["prediction"][0] == 1.0);
    CHECK(j["rows"][1].contains("std_error"));
    CHECK(j["rows"][1].contains("gap"));
}
