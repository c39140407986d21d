#include <gtest/gtest.h>

#include <sstream>

#include "fest/script.hpp"
#include "fest/workload.hpp"

namespace fest {
namespace {

struct ScriptRun {
  int code;
  std::string out;
  std::string err;
};

ScriptRun run(const std::string& script, ScriptConfig config = {}) {
  std::istringstream in(script);
  std::ostringstream out, err;
  const int code = run_script(in, out, err, config);
  return {code, out.str(), err.str()};
}

TEST(Script, ParsesAndFormats) {
  auto c = parse_command("  EXTRACT s 9 11 t  ", 4);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->verb, Verb::kExtract);
  EXPECT_EQ(c->line, 4u);
  EXPECT_EQ(c->names, (std::vector<std::string>{"s", "t"}));
  EXPECT_EQ(c->nums, (std::vector<std::size_t>{9, 11}));
  EXPECT_EQ(format_command(*c), "EXTRACT s 9 11 t");
  EXPECT_FALSE(parse_command("", 1));
  EXPECT_FALSE(parse_command("   ", 1));
  EXPECT_FALSE(parse_command("# MAKE s abc", 1));
  auto m = parse_command("MAKEN s 3 0 65 1000000", 1);
  EXPECT_EQ(m->symbols, (std::vector<Symbol>{0, 65, 1000000}));
  auto u = parse_command("MAKE s h\xC3\xA9", 1);
  EXPECT_EQ(u->symbols, (std::vector<Symbol>{'h', 0xE9}));
  auto sub = parse_command("SUB s 2 #35", 1);
  EXPECT_EQ(sub->symbols, (std::vector<Symbol>{'#'}));
  EXPECT_EQ(format_command(*sub), "SUB s 2 #35");
  EXPECT_EQ(format_symbol(' '), "#32");
  EXPECT_EQ(format_symbol('x'), "x");
}

TEST(Script, ParseErrors) {
  EXPECT_THROW(parse_command("FROB s", 3), ParseError);
  EXPECT_THROW(parse_command("ACCESS s", 3), ParseError);
  EXPECT_THROW(parse_command("ACCESS s 1 2", 3), ParseError);
  EXPECT_THROW(parse_command("ACCESS s x", 3), ParseError);
  EXPECT_THROW(parse_command("MAKEN s 3 1 2", 3), ParseError);
  EXPECT_THROW(parse_command("SUB s 1 ab", 3), ParseError);
  try {
    parse_command("LCP a 1 b", 17);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 17u);
  }
}

TEST(Script, FormatRoundTripsGeneratedCommands) {
  WorkloadOptions opt;
  opt.op_count = 300;
  opt.make_length = 8;
  for (Symbol alphabet : {Symbol{4}, Symbol{300}}) {
    opt.alphabet = alphabet;
    for (const Command& c : random_workload(5, opt)) {
      auto back = parse_command(format_command(c), c.line);
      ASSERT_TRUE(back);
      EXPECT_EQ(*back, c) << format_command(c);
    }
  }
}

TEST(Script, MississippiScenario) {
  const ScriptRun r = run(
      "MAKE s mississippi\n"
      "EXTRACT s 9 11 t\n"
      "RETRIEVE t 1 3\n"
      "RETRIEVE s 1 8\n"
      "INTRO s 1 t\n"
      "RETRIEVE s 1 11\n"
      "ACCESS s 2\n");
  EXPECT_EQ(r.code, exit_code::kOk);
  EXPECT_EQ(r.out, "ppi\nmississi\nppimississi\np\n");
}

TEST(Script, QueryOutputs) {
  const ScriptRun r = run(
      "MAKE a abcd\nMAKE b abce\nLCP a 1 b 1\nEQUAL a 1 b 1 3\nEQUAL a 1 b 1 4\n"
      "MAKEC c ab\nMAKEC d aba\nLCPW c 1 d 1\nLCPW c 1 c 1\nEQW c 1 d 1 2\nEQWW c 1 2 c 1 4\n"
      "MAKEN n 2 0 7\nRETRIEVE n 1 2\nRETRIEVE n 1 0\n");
  EXPECT_EQ(r.code, exit_code::kOk);
  EXPECT_EQ(r.out, "3 LESS\nTRUE\nFALSE\n3 GREATER\nINF EQUAL\nTRUE\nTRUE\n[0 7]\n\n");
}

TEST(Script, ExitCodes) {
  EXPECT_EQ(run("").code, exit_code::kOk);
  EXPECT_EQ(run("# only a comment\n\n").code, exit_code::kOk);
  const ScriptRun p = run("MAKE s abc\nBOGUS\n");
  EXPECT_EQ(p.code, exit_code::kParse);
  EXPECT_NE(p.err.find("line 2"), std::string::npos);
  const ScriptRun q = run("MAKE s abc\nBOGUS\nACCESS s 1\n");
  EXPECT_TRUE(q.out.empty());  // nothing runs before the whole script parses
  const ScriptRun e = run("MAKE s abc\nACCESS s 1\nACCESS s 9\nACCESS s 2\n");
  EXPECT_EQ(e.code, exit_code::kRuntime);
  EXPECT_EQ(e.out, "a\n");
  EXPECT_NE(e.err.find("RangeError"), std::string::npos);
  EXPECT_EQ(run("ACCESS nobody 1\n").code, exit_code::kRuntime);
  EXPECT_EQ(run("MAKE s a\nMAKE s b\n").code, exit_code::kRuntime);
  EXPECT_EQ(run("MAKE s a\nMAKE t b\nINTRO s 2 t\nMAKE t c\nRETRIEVE t 1 1\n").out, "c\n");
}

TEST(Script, ShadowModeAgreesOnValidAndInvalidCommands) {
  ScriptConfig config;
  config.shadow = true;
  config.involution = InvolutionTable::dna();
  const ScriptRun r = run("MAKE s ACGTTA\nREV s 2 5\nMAP s 1 3\nRETRIEVE s 1 6\nLCP s 1 s 2\n", config);
  EXPECT_EQ(r.code, exit_code::kOk) << r.err;
  EXPECT_EQ(r.out, "TAAGCA\n0 GREATER\n");
  const ScriptRun bad = run("MAKE s ACGT\nDEL s 7\n", config);
  EXPECT_EQ(bad.code, exit_code::kRuntime);
}

TEST(Script, StatsGoToErrorStream) {
  ScriptConfig config;
  config.stats = true;
  const ScriptRun r = run("MAKE s abcdef\nACCESS s 3\n", config);
  EXPECT_EQ(r.code, exit_code::kOk);
  EXPECT_EQ(r.out, "c\n");
  EXPECT_NE(r.err.find("rotations\t"), std::string::npos);
  EXPECT_NE(r.err.find("op.access\t1\t"), std::string::npos);
}

TEST(Script, GeneratedWorkloadsRunCleanInShadowMode) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    WorkloadOptions opt;
    opt.op_count = 400;
    opt.make_length = 30;
    opt.alphabet = seed % 2 ? 3 : 64;
    std::ostringstream script;
    for (const Command& c : random_workload(seed, opt)) script << format_command(c) << "\n";
    ScriptConfig config;
    config.shadow = true;
    config.involution = InvolutionTable::adjacent_pairs(64);
    const ScriptRun r = run(script.str(), config);
    EXPECT_EQ(r.code, exit_code::kOk) << "seed " << seed << "\n" << r.err;
  }
}

}  // namespace
}  // namespace fest
