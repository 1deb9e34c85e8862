#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json_schema.hpp"
#include "qpf/json_io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(QPF_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

nlohmann::json load_schema() {
    std::ifstream in(std::string(QPF_SCHEMA_PATH));
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("every subcommand emits schema-valid JSON") {
    auto schema_doc = load_schema();
    const char* invocations[] = {
        "qexp delta --prec 20",
        "qexp e4 --prec 8",
        "qexp e6 --prec 8",
        "qexp hk --k 12 --prec 8",
        "qexp partition --prec 12",
        "tau --n 6",
        "tau --upto 12",
        "congruence --prec 9",
        "hecke-poly --form delta --p 2",
        "hecke-poly --form eis --p 5 --k 8",
        "satake --form delta --p 2",
        "satake --form delta --p 3 --ring complex",
        "stabilize --form delta --p 2 --root alpha --prec 8",
        "stabilize --form delta --p 2 --root alpha --ring complex --prec 8",
        "up-matrix --form delta --p 5",
        "fredholm --form delta --p 2",
        "fredholm --entries '2,1;0,15' --p 5",
        "newton --coeffs 1,24,2048 --p 2",
        "newton --coeffs 1,1,5 --p 5 --render svg",
        "projector --form delta --p 2 --eigen alpha --padic-prec 40",
        "weight-eval --N 1 --p 5 --v 1 --r 2 --chi quadratic --y2 2",
        "eis-family --n 3 --p 5 --weight 6 --component 1",
        "continuity --n 3 --k 2 --k2 6 --p 5 --m 0",
        "balanced --weights 12,12,12",
        "critical --weights 12,12,12",
        "critical --weights 16,2,2",
        "reflect --weights 12,12,12 --s 12",
        "admissibility --slopes 3,3,3",
        "euler8 --form delta --p 2 --ring exact",
        "euler8 --form delta --p 3 --ring padic",
        "lpartial --s 12 --terms 500",
        "triple-l --s 20 --pmax 30",
        "gamma --weights 12,12,12 --s 22",
    };
    for (const char* inv : invocations) {
        CAPTURE(inv);
        auto r = run_cli(std::string(inv) + " --format json");
        REQUIRE(r.exit_code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK_NOTHROW(schema::validate_envelope(j, schema_doc));
        CHECK(j["schema"] == "qpf/1");
        // every run echoes its resolved configuration
        CHECK(j.contains("config"));
        CHECK(j["config"].contains("format"));
    }
}

TEST_CASE("golden CLI outputs") {
    auto r = run_cli("qexp delta --prec 20 --format json");
    auto j = nlohmann::json::parse(r.out);
    auto coeffs = j["result"]["coeffs"];
    CHECK(coeffs[1] == "1");
    CHECK(coeffs[2] == "-24");
    CHECK(coeffs[19] == "10661420");

    auto c = run_cli("congruence --prec 20 --format json");
    auto jc = nlohmann::json::parse(c.out);
    CHECK(jc["result"]["coeffs"][7] == "-2861568");

    auto cr = run_cli("critical --weights 12,12,12 --format json");
    auto jcr = nlohmann::json::parse(cr.out);
    CHECK(jcr["result"]["values"].size() == 11);
    CHECK(jcr["result"]["values"][0] == 12);
    CHECK(jcr["result"]["values"][10] == 22);
}

TEST_CASE("exit codes") {
    CHECK(run_cli("balanced --weights 12,12").exit_code == 2);       // domain error
    CHECK(run_cli("satake --form delta --p 2 --ap 0 --k 2 --ring padic").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand").exit_code != 0);            // usage
    CHECK(run_cli("qexp").exit_code != 0);                           // missing positional
    CHECK(run_cli("--selftest").exit_code == 0);
    // precision error: oldspace matrix at 2 digits cannot deliver 4 digits
    auto r = run_cli("projector --form delta --p 2 --eigen alpha --padic-prec 6 --min-digits 20");
    CHECK(r.exit_code == 3);
}

TEST_CASE("q-expansion JSON round trip") {
    auto d = qpf::delta_series(40);
    auto j = qpf::to_json(d);
    auto back = qpf::qseries_int_from_json(j);
    CHECK(back == d);
    CHECK_THROWS_AS(qpf::qseries_int_from_json(nlohmann::json{{"ring", "rat"}}), qpf::domain_error);
}

TEST_CASE("byte-identical output across runs and thread counts") {
    for (const char* inv :
         {"qexp delta --prec 200 --route eta --format json",
          "triple-l --s 20 --pmax 60 --format json",
          "projector --form delta --p 2 --eigen alpha --padic-prec 40 --format json"}) {
        auto one = run_cli(inv, "OMP_NUM_THREADS=1");
        auto four = run_cli(inv, "OMP_NUM_THREADS=4");
        auto again = run_cli(inv, "OMP_NUM_THREADS=4");
        CHECK(one.exit_code == 0);
        CHECK(one.out == four.out);
        CHECK(four.out == again.out);
    }
}
