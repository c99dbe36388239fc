#include <array>
#include <cstdio>
#include <string>

#include <doctest.h>
#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(QTALG_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int st = pclose(p);
    return {WEXITSTATUS(st), out};
}

}  // namespace

TEST_CASE("cli reduce") {
    Run r = run("reduce --algebra qt \"O34*O45\"");
    CHECK(r.code == 0);
    CHECK(r.out == "q^(1/2)*O4*O345 + q^(-1/2)*O3*O5 - (q^(1/2)*t^(-1/2) + q^(-1/2)*t^(1/2))*O1\n");
    CHECK(run("reduce --algebra qt1 \"O34*O45\"").out == "O4*O345 + O3*O5 - 2*O1\n");
    CHECK(run("reduce \"O1^0\"").out == "1\n");
}

TEST_CASE("cli json") {
    Run r = run("--json reduce --algebra qt1 \"O34*O45\"");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["algebra"] == "qt1");
    REQUIRE(j["terms"].size() == 3);
    CHECK(j["terms"][0]["monomial"].size() == 15);
    CHECK(j["terms"][2]["coeff"][0]["num"] == "-2");
    CHECK(j["terms"][2]["coeff"][0]["den"] == "1");
}

TEST_CASE("cli products, brackets and actions") {
    CHECK(run("mul O2 O1").out == "q^(1/2)*O1*O2 - (q^(3/4) - q^(-1/4))*O12\n");
    CHECK(run("bracket O2 O1").out == "1/2*O1*O2 - O12\n");
    CHECK(run("bracket --t1 O3 O1").out == "0\n");
    CHECK(run("act \"d1\" O2").out == "q^(1/4)*O1*O2 - q^(1/2)*O12\n");
}

TEST_CASE("cli exit codes") {
    CHECK(run("reduce \"O7\"").code == 2);
    CHECK(run("reduce --algebra xx O1").code == 2);
    CHECK(run("act \"d9\" O1").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify table").code == 0);
    CHECK(run("verify qdiff --only g4").code == 0);
    CHECK(run("sample --n 5 --seed 2").code == 0);
}
