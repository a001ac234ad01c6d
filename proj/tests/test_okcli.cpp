#include "doctest.h"

#include <filesystem>

#include "okbody/okcli.hpp"

using namespace okb;
using cli::json;

namespace {

std::string corpus(const std::string &name) {
  return std::string(OKBODY_CORPUS_DIR) + "/" + name + ".json";
}

std::string message_of(const std::string &text) {
  try {
    cli::parse_series_text(text);
  } catch (const InputError &e) {
    return e.what();
  }
  return "";
}

cli::JobSpec job(const std::string &command, const std::string &file, int K) {
  cli::JobSpec j;
  j.command = command;
  j.input = corpus(file);
  j.truncation = K;
  return j;
}

BigRational r(const json &j) { return parse_rational(j.get<std::string>()); }

} // namespace

TEST_CASE("parse errors name the field") {
  CHECK(message_of("{") .find("malformed JSON") != std::string::npos);
  CHECK(message_of(R"({"divisor_degree": 1, "generators": []})")
            .find("ambient_dim") != std::string::npos);
  auto wrong_sum = message_of(R"({"ambient_dim": 1, "divisor_degree": 2,
      "generators": [{"degree": 1, "forms": [[{"exp": [1, 0], "num": 1}]]}]})");
  CHECK(wrong_sum.find("generators[0].forms[0][0].exp") != std::string::npos);
  CHECK(wrong_sum.find("sum to 1") != std::string::npos);
  auto zero_den = message_of(R"({"ambient_dim": 1, "divisor_degree": 1,
      "generators": [{"degree": 1, "forms": [[{"exp": [1, 0], "num": 1, "den": 0}]]}]})");
  CHECK(zero_den.find(".den") != std::string::npos);
  CHECK(message_of(R"({"ambient_dim": 1, "divisor_degree": 1,
      "generators": [{"degree": 1, "forms": [[{"exp": [1], "num": 1}]]}]})")
            .find("expected 2 exponents") != std::string::npos);
}

TEST_CASE("empty generator list is the zero series") {
  auto s = cli::parse_series_text(
      R"({"ambient_dim": 2, "divisor_degree": 1, "generators": []})");
  for (int k = 1; k <= 3; ++k)
    CHECK(s.level(k).dimension() == 0);
}

TEST_CASE("corpus round trip") {
  int seen = 0;
  for (const auto &entry : std::filesystem::directory_iterator(OKBODY_CORPUS_DIR)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind("surface_", 0) == 0)
      continue;
    ++seen;
    CAPTURE(name);
    auto s = cli::parse_series_file(entry.path().string());
    auto back = cli::parse_series(cli::serialize_series(s));
    CHECK(back.ambient_dim() == s.ambient_dim());
    CHECK(back.divisor_degree() == s.divisor_degree());
    for (int k = 1; k <= 2; ++k)
      CHECK(back.level(k).basis() == s.level(k).basis());
  }
  CHECK(seen >= 8);
  CHECK_THROWS_AS(cli::serialize_series(veronese(GradedSeries::complete(2, 1), 2)),
                  UnsupportedError);
}

TEST_CASE("surface files") {
  auto in = cli::parse_surface_file(corpus("surface_blowup_3H_E"));
  CHECK(in.lattice.rank == 2);
  CHECK(in.point_multiplicities.at(0) == 1);
  CHECK_THROWS_AS(cli::parse_surface(json::parse(R"({"rank": 2, "gram": [[1]]})")),
                  InputError);
}

TEST_CASE("flag matrices") {
  auto m = cli::parse_matrix("1,0;1/2,1");
  CHECK(m(1, 0) == make_rational(1, 2));
  CHECK_THROWS_AS(cli::parse_matrix("1,0;1"), InputError);
  cli::FlagSpec spec;
  spec.kind = cli::FlagSpec::Kind::matrix;
  spec.matrix = cli::parse_matrix("1,1;0,0");
  CHECK_THROWS_AS(spec.make(2), InputError);
}

TEST_CASE("body envelope") {
  auto env = cli::run(job("body", "p2_except_x2x3", 6)).doc;
  CHECK(env["schema"] == cli::kSchemaVersion);
  CHECK(env["command"] == "body");
  CHECK(env["exact"] == true);
  CHECK(env["input"]["sha256"].get<std::string>().size() == 64);
  const auto &b = env["payload"]["body"];
  CHECK(b["vertices"].size() == 3);
  CHECK(r(b["volume"]) == 2);
  CHECK(env["payload"]["certificate"]["kind"] == "monomial_generators");
}

TEST_CASE("identical jobs give identical bytes") {
  auto a = cli::run(job("volume", "p2_blowup_3H_E", 5)).text();
  auto b = cli::run(job("volume", "p2_blowup_3H_E", 5)).text();
  CHECK(a == b);
  auto g1 = cli::run(job("generic-test", "p2_line_base", 4)).text();
  auto g2 = cli::run(job("generic-test", "p2_line_base", 4)).text();
  CHECK(g1 == g2);
}

TEST_CASE("sha256") {
  CHECK(cli::sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("slice against the restricted series") {
  auto j = job("slice", "p2_complete_O2", 8);
  j.t = 1;
  auto p = cli::run(j).doc["payload"];
  CHECK(p["meets_interior"] == true);
  CHECK(p["equal"] == true);
  const auto &v = p["direct"]["vertices"];
  REQUIRE(v.size() == 2);
  CHECK(r(v[0][0]) == 0);
  CHECK(r(v[1][0]) == 1);
}

TEST_CASE("volume, birational, base locus, sheafify") {
  auto v = cli::run(job("volume", "p2_squares", 8)).doc["payload"];
  CHECK(v["index"]["index"] == "4");
  CHECK(v["normalization"]["holds"] == true);
  auto b = cli::run(job("birational", "p2_squares", 4)).doc["payload"];
  CHECK(b["birational"] == false);
  auto l = cli::run(job("base-locus", "p2_two_points", 4)).doc["payload"];
  CHECK(l["components"].size() == 2);
  CHECK(l["stabilized"] == true);
  auto s = cli::run(job("sheafify", "p2_except_x2x3", 3)).doc["payload"];
  CHECK(s["added_in_level_1"].size() == 1);
}

TEST_CASE("generic flags agree") {
  auto j = job("generic-test", "p2_except_x2x3", 8);
  auto p = cli::run(j).doc["payload"];
  CHECK(p["all_equal"] == true);
  CHECK(p["bodies"].size() == 5);
}

TEST_CASE("filtered dimensions and fujita") {
  auto j = job("filtered-dims", "p2_complete_O1", 3);
  j.sigma_max = 2;
  auto rows = cli::run(j).doc["payload"]["rows"];
  // sigma = () gives the full dimensions.
  CHECK(rows[0]["dims"] == json({3, 6, 10}));
  auto f = cli::run(job("fujita", "p2_blowup_3H_E", 3)).doc["payload"];
  for (const auto &b : f["bodies"])
    CHECK(b["inside_series_body"] == true);
  for (const auto &c : f["chain"])
    CHECK(c["contained"] == true);
}

TEST_CASE("surface command") {
  cli::JobSpec j;
  j.command = "surface";
  j.input = corpus("surface_p2_O2");
  auto p = cli::run(j).doc["payload"];
  CHECK(r(p["area"]) == 2);
  CHECK(r(p["mu"]) == 2);
}

TEST_CASE("plots") {
  auto body = okounkov_body(GradedSeries::complete(2, 1), Flag::standard(3), 2);
  auto svg = cli::polytope_svg(body.polytope, "triangle");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  auto solid = okounkov_body(GradedSeries::complete(3, 1), Flag::standard(4), 1);
  CHECK(cli::polytope_svg(solid.polytope, "tetrahedron").find("<line") !=
        std::string::npos);
  auto four = okounkov_body(GradedSeries::complete(4, 1), Flag::standard(5), 1);
  CHECK_THROWS_AS(cli::polytope_svg(four.polytope, "x"), UnsupportedError);
  SurfaceLattice plane{1, IntMatrix{{1}}, {}, {IntVector{BigInt(1)}}};
  auto sb = surface_body(plane, RatVector{BigRational(2)}, RatVector{BigRational(1)});
  auto ssvg = cli::surface_svg(sb);
  CHECK(ssvg.find("(a)") != std::string::npos);
  CHECK(ssvg.find("?") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli::exit_code(InputError("x")) == 2);
  CHECK(cli::exit_code(UnsupportedError("x")) == 3);
  CHECK(cli::exit_code(InvariantError("x")) == 4);
  CHECK_THROWS_AS(cli::run(job("body", "no_such_file", 2)), InputError);
  CHECK_THROWS_AS(cli::run(job("nonsense", "p2_squares", 2)), InputError);
  CHECK_THROWS_AS(cli::run(job("sheafify", "p2_point_1_1_1", 2)),
                  UnsupportedError);
}
