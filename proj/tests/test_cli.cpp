#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

fs::path workdir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / ("young_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

Run run(const std::string& args) {
    const fs::path out = workdir() / "stdout.txt";
    const std::string cmd = std::string(YOUNG_SLICE_BIN) + " " + args + " > " + out.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out);
    std::stringstream text;
    text << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text.str()};
}

std::string write(const std::string& name, const std::string& text) {
    const fs::path p = workdir() / name;
    std::ofstream(p) << text;
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    return text.str();
}

const char* kX1 = R"({"n": 4, "k": 2, "values": [
    {"set": [2, 4], "value": "0"}, {"set": [1, 2], "value": "1"}, {"set": [1, 3], "value": "1"},
    {"set": [1, 4], "value": "1"}, {"set": [2, 3], "value": "0"}, {"set": [3, 4], "value": "0"}]})";

}  // namespace

TEST_CASE("basis") {
    Run r = run("basis --n 4 --d 2");
    CHECK(r.code == 0);
    CHECK(r.out == "(2,4)\tphi=(1,3)\tc=1\n(3,4)\tphi=(1,2)\tc=3\n");
    r = run("basis --n 4 --d 0");
    CHECK(r.code == 0);
    CHECK(r.out == "()\tphi=()\tc=1\n");
    CHECK(run("basis --n 3 --d 2").code == 2);
    CHECK(run("basis --n 4").code == 2);
    r = run("basis --n 4 --d 1 --expand --format json");
    CHECK(r.code == 0);
    const json rows = json::parse(r.out);
    CHECK(rows.size() == 3);
    CHECK(rows[1]["top_set"] == json::array({3}));
    CHECK(rows[1]["c"] == "3");
    CHECK(rows[1].contains("chi"));
}

TEST_CASE("expand and synthesize round trip") {
    const std::string in = write("x1.json", kX1);
    const std::string coeffs = (workdir() / "x1_coeffs.json").string();
    const std::string back = (workdir() / "x1_back.json").string();
    REQUIRE(run("expand --slice 4 2 --input " + in + " --output " + coeffs).code == 0);
    const json e = json::parse(slurp(coeffs));
    CHECK(e == json::parse(R"({"n": 4, "k": 2, "coeffs": [
        {"top_set": [], "value": "1/2"}, {"top_set": [2], "value": "1/2"},
        {"top_set": [3], "value": "1/6"}, {"top_set": [4], "value": "1/12"}]})"));
    REQUIRE(run("synthesize --slice 4 2 --input " + coeffs + " --output " + back).code == 0);

    // Canonically sorted input must match the synthesized file byte for byte.
    json canonical = json::parse(kX1);
    std::sort(canonical["values"].begin(), canonical["values"].end(),
              [](const json& a, const json& b) { return a["set"] < b["set"]; });
    CHECK(slurp(back) == canonical.dump(2) + "\n");

    const Run again = run("expand --slice 4 2 --input " + in);
    CHECK(json::parse(again.out) == e);
}

TEST_CASE("input errors exit with code 2 and name the record") {
    json doc = json::parse(kX1);
    doc["values"][3]["set"] = json::array({1, 2});
    Run r = run("expand --slice 4 2 --input " + write("dup.json", doc.dump()));
    CHECK(r.code == 2);
    CHECK(r.out.find("values[3]") != std::string::npos);

    doc = json::parse(kX1);
    doc["values"][5]["value"] = "3/0";
    r = run("expand --slice 4 2 --input " + write("badq.json", doc.dump()));
    CHECK(r.code == 2);
    CHECK(r.out.find("values[5]") != std::string::npos);

    doc = json::parse(kX1);
    doc["values"].erase(doc["values"].begin());
    CHECK(run("expand --slice 4 2 --input " + write("short.json", doc.dump())).code == 2);
    CHECK(run("expand --slice 5 2 --input " + write("x1.json", kX1)).code == 2);
    CHECK(run("expand --slice 4 2 --input /nonexistent/file.json").code == 2);
    CHECK(run("expand --slice 4 2 --input " + write("garbage.json", "{not json")).code == 2);
    CHECK(run("frobnicate").code == 2);
}

TEST_CASE("influence") {
    const Run r = run("influence --slice 4 2 --input " + write("x1.json", kX1));
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["pairs"][0] == json::parse(R"({"pair": [1, 2], "value": "1/3"})"));
    CHECK(j["pairs"][5] == json::parse(R"({"pair": [3, 4], "value": "0"})"));
    CHECK(j["total"] == "1/4");
    CHECK(j["variance"] == "1/4");
}

TEST_CASE("spectrum") {
    Run r = run("spectrum --slice 4 2 --profile 0,1,0");
    CHECK(r.code == 0);
    CHECK(r.out == "degree\teigenvalue\tmultiplicity\n0\t4\t1\n1\t0\t3\n2\t-2\t2\n");
    r = run("spectrum --slice 5 2 --profile 1,0,0 --format json");
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["spectrum"][1] == json::parse(R"({"degree": 1, "eigenvalue": "-2", "multiplicity": "4"})"));
    CHECK(run("spectrum --slice 4 2 --profile 0,1").code == 2);
    CHECK(run("spectrum --slice 4 2 --profile 0,x,1").code == 2);
}

TEST_CASE("noise") {
    const std::string in = write("x1.json", kX1);
    Run r = run("noise --slice 4 2 --t 1 --input " + in);
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["values"].size() == 6);
    CHECK(j["values"][0]["value"].is_number_float());
    const double expected = 0.5 + 0.5 * std::exp(-2.0 / 3);  // value at {1,2}
    CHECK(j["values"][0]["value"].get<double>() == doctest::Approx(expected).epsilon(1e-14));

    const std::string coeffs = (workdir() / "noise_coeffs.json").string();
    REQUIRE(run("expand --slice 4 2 --input " + in + " --output " + coeffs).code == 0);
    r = run("noise --slice 4 2 --t 0 --input " + coeffs);
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["coeffs"][3]["value"].get<double>() == doctest::Approx(1.0 / 12).epsilon(1e-14));
    CHECK(run("noise --slice 4 2 --t -1 --input " + in).code == 2);
}

TEST_CASE("junta") {
    const std::string in = write("x1.json", kX1);
    Run r = run("junta --slice 4 2 --tau 1/4 --input " + in);
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["important_set"] == json::array({1, 2}));
    CHECK(j["distance"] == "0");
    CHECK(j["junta"] == json::parse(R"({"n": 4, "k": 2, "values": [
        {"set": [1, 2], "value": "1"}, {"set": [1, 3], "value": "1"}, {"set": [1, 4], "value": "1"},
        {"set": [2, 3], "value": "0"}, {"set": [2, 4], "value": "0"}, {"set": [3, 4], "value": "0"}]})"));
    r = run("junta --slice 4 2 --eps 1/2 --input " + in);
    REQUIRE(r.code == 0);
    j = json::parse(r.out);
    CHECK(j["coordinate_count"] == 0);
    CHECK(run("junta --slice 4 2 --input " + in).code == 2);
    CHECK(run("junta --slice 4 2 --tau 1/4 --eps 1/2 --input " + in).code == 2);

    json doc = json::parse(kX1);
    doc["values"][0]["value"] = "1/2";
    CHECK(run("junta --slice 4 2 --tau 1/4 --input " + write("half.json", doc.dump())).code == 2);
}

TEST_CASE("verify") {
    Run r = run("verify --suite all --max-n 6");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("suite\tproperty\tinstance\tresult\tdetail\n", 0) == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    r = run("verify --suite eigen --max-n 5");
    CHECK(r.code == 0);
    CHECK(r.out.find("eigen\t") != std::string::npos);
    CHECK(run("verify --suite bogus").code == 2);
    CHECK(run("verify --suite norms --max-n 1").code == 2);
}
