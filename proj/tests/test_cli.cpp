#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hilb/cli.hpp"
#include "hilb/generators.hpp"
#include "hilb/polynomial.hpp"

using namespace hilb;
using nlohmann::json;

namespace {

json read_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return json::parse(in);
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("identity suite subcommand exits 0 and writes its artifact") {
    TempFile out("cli_identities.json");
    CHECK(cli::run({"identities", "--d", "4", "--out", out.path}) == 0);
    json j = read_json(out.path);
    CHECK(j.at("outcome").at("pass") == true);
    CHECK(j.at("tool").at("name") == "hilb");
    CHECK(j.at("kind") == "identity-suite");
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli::run({"identities", "--no-such-flag"}) == 2);
    CHECK(cli::run({"no-such-subcommand"}) == 2);
    CHECK(cli::run({}) == 2);
    CHECK(cli::run({"minor"}) == 2);
    CHECK(cli::run({"schur", "4"}) == 2);
}

TEST_CASE("generators subcommand emits the pinned polynomial format") {
    TempFile out("cli_gens.json");
    CHECK(cli::run({"generators", "--d", "3", "--stage", "q", "--out", out.path}) == 0);
    json j = read_json(out.path);
    CHECK(j.at("outcome").at("count") == 27);  // d^2 C(d,2) at d = 3
    const auto& gens = j.at("outcome").at("generators");
    REQUIRE(gens.size() == 27);
    Poly first = poly_from_json(gens[0].at("poly").dump());
    CHECK(first.dim() == 3);
    CHECK(first.is_homogeneous(2));
}

TEST_CASE("schur subcommands") {
    TempFile out("cli_schur.json");
    CHECK(cli::run({"schur", "8", "--dim", "3,1,1,1,1,1,1", "--out", out.path}) == 0);
    CHECK(read_json(out.path).at("outcome").at("dim") == "280");
    CHECK(cli::run({"schur", "4", "--ledger", "--out", out.path}) == 0);
    CHECK(cli::run({"schur", "3", "--sym2", "3,1", "--out", out.path}) == 0);
    CHECK(read_json(out.path).at("outcome").at("summands").size() == 5);
}

TEST_CASE("sample subcommand is deterministic per seed") {
    TempFile out1("cli_sample1.json");
    TempFile out2("cli_sample2.json");
    CHECK(cli::run({"sample", "--d", "3", "--n", "4", "--seed", "9", "--out", out1.path}) == 0);
    CHECK(cli::run({"sample", "--d", "3", "--n", "4", "--seed", "9", "--out", out2.path}) == 0);
    CHECK(read_json(out1.path).at("outcome") == read_json(out2.path).at("outcome"));
    TempFile out3("cli_sample3.json");
    CHECK(cli::run({"sample", "--d", "3", "--n", "4", "--seed", "10", "--out", out3.path}) == 0);
    CHECK(read_json(out1.path).at("outcome") != read_json(out3.path).at("outcome"));
}

TEST_CASE("membership subcommand on a generator and on a bare coordinate") {
    TempFile poly_file("cli_poly.json");
    TempFile out("cli_member.json");
    {
        std::ofstream f(poly_file.path);
        f << poly_to_json(build_generator(8, GenIndex{2, 5, 6, 7}));
    }
    CHECK(cli::run({"membership", "--poly", poly_file.path, "--d", "8", "--n", "5", "--seed", "3", "--out",
                    out.path}) == 0);
    CHECK(read_json(out.path).at("outcome").at("vanishes_on_all_samples") == true);

    {
        std::ofstream f(poly_file.path);
        f << poly_to_json(Poly::variable(8, CoordIndex::make(1, 1, 1)));
    }
    CHECK(cli::run({"membership", "--poly", poly_file.path, "--d", "8", "--n", "5", "--seed", "3", "--out",
                    out.path}) == 0);
    json j = read_json(out.path);
    CHECK(j.at("outcome").at("vanishes_on_all_samples") == false);
    CHECK(j.at("outcome").contains("counterexample"));
}

TEST_CASE("jacobian subcommand at d=3") {
    TempFile out("cli_jac.json");
    CHECK(cli::run({"jacobian", "--d", "3", "--n", "3", "--seed", "5", "--out", out.path}) == 0);
    json j = read_json(out.path);
    CHECK(j.at("outcome").at("expected") == 12);
    for (const auto& r : j.at("outcome").at("ranks")) CHECK(r == 12);
}

TEST_CASE("curve subcommand: evaluation and limit") {
    TempFile out("cli_curve.json");
    CHECK(cli::run({"curve", "--d", "3", "--anchors", "0:1,1:0,2:1", "--at", "5:7", "--out", out.path}) == 0);
    json j = read_json(out.path);
    CHECK(j.at("outcome").at("center_is_origin") == true);
    CHECK(cli::run({"curve", "--d", "3", "--anchors", "0:1,1:0,2:1", "--limit", "1", "--out", out.path}) == 0);
    CHECK(read_json(out.path).at("outcome").at("on_chart") == true);
}

TEST_CASE("m-matrix and minor subcommands") {
    TempFile out("cli_mm.json");
    TempFile exported("cli_m.json");
    CHECK(cli::run({"m-matrix", "--verify", "--export", exported.path, "--out", out.path}) == 0);
    json m = read_json(exported.path);
    CHECK(m.at("rows") == 90);
    CHECK(m.at("cols") == 115);

    TempFile cols("cli_cols.json");
    TempFile cert("cli_cert.json");
    CHECK(cli::run({"minor", "--find", "--seed", "1", "--out", cols.path}) == 0);
    json found = read_json(cols.path);
    CHECK(found.at("outcome").at("columns").size() == 90);
    {
        std::ofstream f(cols.path);
        f << json{{"columns", found.at("outcome").at("columns")}}.dump();
    }
    CHECK(cli::run({"minor", "--certify", "--cols", cols.path, "--n", "2", "--seed", "4", "--out", cert.path}) == 0);
    json c = read_json(cert.path);
    CHECK(c.at("kind") == "minor-vanishing");
    CHECK(c.at("outcome").at("pass") == true);
    CHECK(c.at("outcome").at("samples").size() == 2);
}
