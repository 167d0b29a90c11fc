#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "glm/equivar.hpp"
#include "render.hpp"
#include "support.hpp"

using namespace glm;
using namespace glm::testing;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(GLM_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
    std::string path = std::string(GLM_TEST_TMP) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("symbols for common values") {
    using render::symbol;
    CHECK(symbol(Cyclotomic(2)) == "2");
    CHECK(symbol(Cyclotomic(Rational(-1, 2))) == "-1/2");
    CHECK(symbol(root_of_unity(7, 16)) == "e(7/16)");
    CHECK(symbol(sqrt_int(2)) == "√2");
    CHECK(symbol(-sqrt_int(3)) == "-√3");
    CHECK(symbol(Cyclotomic(2) * root_of_unity(1, 8)) == "2*e(1/8)");
    CHECK(symbol(sqrt_int(2) * root_of_unity(1, 8)) == "√2*e(1/8)");
    CHECK(symbol(sqrt_int(8)) == "2*√2");
    CHECK(symbol(Cyclotomic(Rational(1, 2)) * root_of_unity(1, 3)) == "1/2*e(1/3)");
}

TEST_CASE("JSON cyclotomics round-trip") {
    for (std::string f : {"4_1^+1 + 4_1^+1", "5^+1", "2_1^+1 + 3^-1"}) {
        auto md = modular_data(make_category(build(parse_jordan(f)), -1));
        for (const auto& row : md.S)
            for (const auto& x : row) {
                auto j = render::to_json(x);
                CHECK(render::from_json(nlohmann::json::parse(j.dump())) == x);
                CHECK(close({j["approx"][0].get<double>(), j["approx"][1].get<double>()}, x.approx()));
            }
    }
    Cyclotomic big = Cyclotomic(Rational::from_big(BigInt(1) << 80, 3)) * root_of_unity(1, 5);
    CHECK(render::from_json(render::to_json(big)) == big);
    CHECK_THROWS(render::from_json(nlohmann::json::parse(R"({"terms": [[1, 2]]})")));
}

TEST_CASE("check exit codes") {
    CHECK(run("check --jordan 4_1^+1 --epsilon +1").code == 0);
    CHECK(run("check --jordan 4_1^+1 --epsilon -1 --beta-sign negative --alpha-branch negative").code == 0);
    CHECK(run("check --jordan 4_1^+0").code == 2);
    CHECK(run("check --jordan 1^+1").code == 2);
    CHECK(run("check").code == 2);
    CHECK(run("check --jordan 4_1^+1 --epsilon 2").code == 2);
    CHECK(run("check --jordan 4_1^+1 --format yaml").code == 2);
    CHECK(run("frobnicate").code == 2);
    auto a1 = temp_file("a1.gram", "1\n2\n");
    CHECK(run("check --jordan 4_1^+1 --gram " + a1).code == 2);
    auto r = run("check --gram " + a1);
    CHECK(r.code == 0);
    CHECK(r.out.find("delta    (1)") != std::string::npos);
    CHECK(run("check --gram " + temp_file("odd.gram", "1\n1\n")).code == 2);
    CHECK(run("check --gram " + temp_file("bad.gram", "2\n2 1\n")).code == 2);
}

TEST_CASE("check JSON report") {
    auto r = run("check --jordan 2_1^+1 --format json");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["checks"]["pentagon XXXX"] == "pass");
    CHECK(j["coherence"].is_array());
    CHECK(j["coherence"][0].contains("instances_checked"));
}

TEST_CASE("modular-data JSON matches the library") {
    auto r = run("modular-data --jordan 4_1^+1 --epsilon +1 --format json --paper-order");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    for (auto key : {"input", "epsilon", "alpha", "beta", "objects", "T", "S", "dims", "global_dim", "checks"})
        CHECK(j.contains(key));
    auto cat = make_category(build(parse_jordan("4_1^+1")), 1);
    auto md = modular_data(cat);
    md = permuted(md, paper_order(md));
    REQUIRE(j["S"].size() == 9);
    for (int i = 0; i < 9; ++i) {
        CHECK(j["objects"][i] == md.labels[i]);
        CHECK(render::from_json(j["T"][i]) == md.T[i]);
        for (int k = 0; k < 9; ++k) CHECK(render::from_json(j["S"][i][k]) == md.S[i][k]);
    }
    CHECK(render::from_json(j["alpha"]) == root_of_unity(7, 16));
    CHECK(render::from_json(j["global_dim"]) == Cyclotomic(16));
    for (auto& [k, v] : j["checks"].items()) CHECK(v == "pass");
}

TEST_CASE("modular-data table for 3^-1") {
    auto r = run("modular-data --jordan 3^-1");
    CHECK(r.code == 0);
    CHECK(r.out.find("objects (5)") != std::string::npos);
    CHECK(r.out.find("-√3") != std::string::npos);
}

TEST_CASE("gauss, fusion and info") {
    auto g = run("gauss --jordan 4_1^+1");
    CHECK(g.code == 0);
    CHECK(g.out.find("G_delta(q^-1)    e(7/8)") != std::string::npos);
    CHECK(g.out.find("signature        1") != std::string::npos);
    auto s6 = run("gauss --gram " + temp_file("s6.gram", "1\n6\n") + " --format json");
    REQUIRE(s6.code == 0);
    CHECK(render::from_json(nlohmann::json::parse(s6.out)["G_delta_q_inv"]) == root_of_unity(7, 8));
    auto f = run("fusion --jordan 2_1^+1 --format json");
    REQUIRE(f.code == 0);
    auto fj = nlohmann::json::parse(f.out);
    CHECK(fj["objects"].size() == 8);
    CHECK(fj["fusion"].size() == 64);
    auto i = run("info --jordan \"2_1^+1 + 3^-1\" --format json");
    REQUIRE(i.code == 0);
    auto ij = nlohmann::json::parse(i.out);
    CHECK(ij["order"] == 6);
    CHECK(ij["two_gamma_order"] == 3);
    CHECK(ij["delta"] == "(1,0)");
}
