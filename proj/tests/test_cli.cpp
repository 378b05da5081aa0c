#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  std::string out;
  int status = 0;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(DICRIT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(DICRIT_DATA) + "/" + name; }

nlohmann::ordered_json parse(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("info") {
  const auto r = cli("info --input " + data("sextic.json"));
  CHECK(r.status == 0);
  const auto j = parse(r);
  CHECK(j.at("beta") == nlohmann::json({6, 9, 13}));
  CHECK(j.at("v") == nlohmann::json({6, 9, 22}));
  CHECK(j.at("mu") == 48);
  CHECK(j.at("weierstrass_check") == true);
}

TEST_CASE("value, expand and contact") {
  CHECK(parse(cli("value --input " + data("sextic.json"))).at("I") == 45);
  CHECK(parse(cli("expand --input " + data("sextic.json"))).at("value") == 45);
  const auto c = parse(cli("contact --input " + data("sextic.json")));
  CHECK(c.at("contact") == "2");
  CHECK(c.at("exact") == true);
  CHECK(parse(cli("value --input " + data("cusp.json"))).at("nu") == 2);
  CHECK(parse(cli("zariski --input " + data("cusp.json"))).at("lambda") == "inf");
}

TEST_CASE("dicritical and separatrices") {
  const auto d = parse(cli("dicritical --i 0 --j 1 --input " + data("zeta1.json")));
  CHECK(d.at("dicritical") == true);
  CHECK(d.at("I_H2") == 30);
  const auto b = cli("dicritical --input " + data("borderline.json"));
  CHECK(b.status == 0);
  CHECK(parse(b).at("dicritical") == false);

  const auto s = cli("separatrices --i 0 --j 1 --order 10 --special --input " + data("zeta1.json"));
  REQUIRE(s.status == 0);
  const auto j = parse(s);
  CHECK(j.at("family").at("denominators") == "monomial");
  CHECK(j.at("special").at("nu") == 27);
  CHECK(j.at("special").at("contact") == "2");
  CHECK(j.at("special").at("I_F_Fstar") == 21);

  const auto z2 = parse(cli("separatrices --i 0 --j 2 --order 25 --at-u 0 --input " + data("zeta2.json")));
  CHECK(z2.at("family").at("denominators") == "polynomial");
  CHECK(z2.at("at_u").at("n") == 6);

  const auto pole = cli("separatrices --order 10 --at-u 0 --input " + data("zeta1.json"));
  CHECK(pole.status == 1);
  CHECK(parse(pole).at("error") == "PoleAtPoint");

  const auto refused = cli("separatrices --order 10 --input " + data("borderline.json"));
  CHECK(refused.status == 1);
  CHECK(parse(refused).at("error") == "PreconditionFailed");
}

TEST_CASE("azevedo") {
  const auto j = parse(cli("azevedo --n 2 --m 3 --input " + data("azevedo.json")));
  CHECK(j.at("reconstructs") == true);
  CHECK(j.at("H2").at("terms") == nlohmann::json::parse(R"([[5, 0, "-1"]])"));
}

TEST_CASE("graph") {
  const auto r = cli("graph --dot --input " + data("sextic.json"));
  CHECK(r.status == 0);
  CHECK(r.out.find("graph") == 0);
  CHECK(r.out.find("T2") != std::string::npos);
}

TEST_CASE("errors") {
  const auto bad = cli("info --input " + data("bad.json"));
  CHECK(bad.status == 1);
  CHECK(parse(bad).at("error") == "ParseError");
  const auto missing = cli("info --input " + data("nope.json"));
  CHECK(missing.status == 1);
  CHECK(parse(missing).at("error") == "ParseError");
  const auto nokey = cli("dicritical --input " + data("azevedo.json"));
  CHECK(parse(nokey).at("error") == "ParseError");
}

TEST_CASE("selftest") {
  const auto r = cli("selftest --json-indent -1");
  CHECK(r.status == 0);
  CHECK(parse(r).at("pass") == true);
}
