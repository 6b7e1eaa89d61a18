#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CCX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) {
    return std::string(CCX_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("chromatic subcommand") {
    auto r = run("chromatic " + data("k3.graph"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "t^3 - 3t^2 + 2t\n");
    auto c4 = run("chromatic " + data("c4.graph"));
    CHECK(c4.out == "t^4 - 4t^3 + 6t^2 - 3t\n");
}

TEST_CASE("hvector subcommands") {
    auto color = run("--format json hvector color " + data("k3.graph"));
    CHECK(color.exit_code == 0);
    auto j = nlohmann::json::parse(color.out);
    CHECK(j["h"] == nlohmann::json({"1", "5", "0", "0"}));
    CHECK(j["kind"] == "color");

    auto unip = run("--format json hvector unipolar " + data("k3.graph"));
    CHECK(nlohmann::json::parse(unip.out)["h"] ==
          nlohmann::json({"1", "2"}));

    auto bn = run("--format json hvector bn " + data("b3.arr"));
    CHECK(nlohmann::json::parse(bn.out)["h"] ==
          nlohmann::json({"1", "24", "47"}));

    auto mat = run("--format json hvector matroid --chi 1,-9,23,-15");
    CHECK(nlohmann::json::parse(mat.out)["h"] ==
          nlohmann::json({"1", "6", "47", "0", "0"}));
}

TEST_CASE("complex subcommands") {
    auto r = run("--format json complex color " + data("k3.graph") + " --betti");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["faces"] == 6);
    CHECK(j["dim"] == 0);
    CHECK(j["betti"] == nlohmann::json({"0", "5"}));

    auto u = run("--format json complex unipolar " + data("k3.graph") +
                 " --vertex 2 --dump-faces");
    auto ju = nlohmann::json::parse(u.out);
    CHECK(ju["faces"] == 3);
    CHECK(ju["face-list"].size() == 3);

    auto b = run("--format json complex bn " + data("b3.arr"));
    auto jb = nlohmann::json::parse(b.out);
    CHECK(jb["dim"] == 1);
    CHECK(jb["pure"] == true);
    CHECK(jb["h"] == nlohmann::json({"1", "24", "47"}));
}

TEST_CASE("check subcommands") {
    CHECK(run("check mvector 1,3,6,10").exit_code == 0);
    auto bad = run("--format json check mvector 1,120,351,3952");
    CHECK(bad.exit_code == 0);
    auto j = nlohmann::json::parse(bad.out);
    CHECK(j["m-vector"] == false);
    CHECK(j["witness"] == 2);

    auto ced = run("--format json check ced 1,121,472,4424,9167,2375");
    auto jc = nlohmann::json::parse(ced.out);
    CHECK(jc["monotone"] == true);
    CHECK(jc["symmetric"] == true);
    CHECK(jc["g-m-vector"] == false);
    CHECK(jc["g"] == nlohmann::json({"1", "120", "351", "3952"}));
}

TEST_CASE("charpoly subcommand") {
    auto r = run("charpoly " + data("b3.arr"));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "t^3 - 9t^2 + 23t - 15  (rank 3)\n");
}

TEST_CASE("verify-paper exit codes") {
    CHECK(run("verify-paper").exit_code == 0);
    CHECK(run("verify-paper --corrupt Ex-B3.chi").exit_code == 1);
}

TEST_CASE("input errors exit with 2") {
    CHECK(run("chromatic /nonexistent/file.graph").exit_code == 2);
    CHECK(run("chromatic " + data("bad.graph")).exit_code == 2);
    CHECK(run("check mvector 1,,3").exit_code == 2);
}

TEST_CASE("json output is stable across runs") {
    auto a = run("--format json hvector color " + data("c4.graph"));
    auto b = run("--format json hvector color " + data("c4.graph"));
    CHECK(a.out == b.out);
}
