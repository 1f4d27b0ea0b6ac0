#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "oh/cli.hpp"

using oh::run;
using json = nlohmann::json;

namespace {

json run_json(std::vector<std::string> args, int expect_code = 0) {
  args.insert(args.begin(), "--json");
  const auto r = run(args);
  EXPECT_EQ(r.code, expect_code) << r.out << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j.contains("ok") && j.contains("result") && j.contains("diagnostics"));
  EXPECT_TRUE(j["diagnostics"].is_array());
  return j;
}

}  // namespace

TEST(Cli, DocumentedExamples) {
  auto r = run({"--h", "x^2", "mul", "t", "x^2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^2*t + 2*x^3\n");
  r = run({"--h", "x^2", "aut"});
  EXPECT_EQ(r.out, "torsion=k*\n");
  r = run({"--h", "x^2", "isotropy", "check", "--D", "deriv(w=-x, H=t, s=0)", "--rho", "sigma(x^2);tau(2)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "member=true\n");
}

TEST(Cli, JsonShapes) {
  json j = run_json({"--h", "x^2", "mul", "t", "x^2"});
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["result"]["element"], json::parse(R"([[0,"2*x^3"],[1,"x^2"]])"));
  j = run_json({"--h", "x^3 - x", "aut"});
  EXPECT_EQ(j["result"]["order"], 2);
  j = run_json({"--h", "x^2", "decompose", "--Dx", "0", "--Dt", "x^2"});
  EXPECT_TRUE(j["result"].contains("derivation"));
  j = run_json({"--h", "x^2", "isotropy", "describe", "--D", "deriv(w=-x, H=t)"});
  for (const char* k : {"torsion_kind", "order", "r_rule", "certified", "params", "symbolic"})
    EXPECT_TRUE(j["result"].contains(k)) << k;
  j = run_json({"lnd", "exp", "x^2"});
  EXPECT_EQ(j["ok"], true);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--h", "x^2", "isotropy", "check", "--D", "deriv(w=-x, H=t)", "--rho", "tau(3)"}).code, 1);
  EXPECT_EQ(run({"--h", "x^2", "decompose", "--Dx", "x", "--Dt", "0"}).code, 1);
  EXPECT_EQ(run({"--h", "x^2", "mul", "t*(", "x"}).code, 2);
  EXPECT_EQ(run({"--h", "x^2", "frobnicate"}).code, 2);
  EXPECT_EQ(run({"aut"}).code, 2);
  EXPECT_EQ(run({"--h", "2*x^2"}).code, 2);
  EXPECT_EQ(run({"--h", "2*x^2", "aut"}).code, 2);
  EXPECT_EQ(run({"--h", "x^2", "power", "--rho", "tau(2)", "0"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);

  const json j = run_json({"--h", "x^2", "mul", "t*(", "x"}, 2);
  EXPECT_EQ(j["ok"], false);
  EXPECT_TRUE(j["result"].is_null());
  EXPECT_NE(j["diagnostics"][0].get<std::string>().find("offset 3"), std::string::npos);
}

TEST(Cli, NegativeArgumentsAfterSeparator) {
  const auto r = run({"--h", "x^2", "mul", "--", "-x", "t"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-x*t\n");
  EXPECT_EQ(run({"--h", "x^2", "conjugate", "--rho=tau(-1)", "--D=deriv(w=-x)"}).code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"--json", "--h", "x^3", "isotropy", "describe", "--D", "deriv(w=t + x)"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, MoreCommands) {
  EXPECT_EQ(run({"--h", "x^2", "comm", "t", "x"}).out, "x^2\n");
  EXPECT_EQ(run({"--h", "x^2", "apply", "--rho", "tau(sym)", "x*t"}).out, "a^2*x*t\n");
  EXPECT_EQ(run({"--h", "x^2", "power", "--rho", "sigma(x);tau(2)", "3"}).out, "sigma(3*x);tau(8)\n");
  EXPECT_EQ(run({"--h", "x^2", "conjugate", "--rho", "sigma(x^2+2);tau(1)", "--D", "deriv(H=t)"}).out,
            "deriv(w=x, H=t, s=2)\n");
  EXPECT_EQ(run({"--h", "x^3", "isotropy", "describe", "--D", "deriv(w=t + x)"}).out,
            "torsion=G_2 r=affine-family certified=true\na=1 r=c\na=-1 r=2*x + c\n");
  EXPECT_EQ(run({"--h", "2*x^2 + 4*x + 2", "normalize"}).code, 0);
}
