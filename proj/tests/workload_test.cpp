#include <gtest/gtest.h>

#include "fest/forest.hpp"
#include "fest/workload.hpp"

namespace fest {
namespace {

TEST(Workload, DeterministicPerSeed) {
  WorkloadOptions opt;
  opt.op_count = 500;
  EXPECT_EQ(random_workload(9, opt), random_workload(9, opt));
  EXPECT_NE(random_workload(9, opt), random_workload(10, opt));
  EXPECT_EQ(random_workload(9, opt).size(), 500u);
}

TEST(Workload, ZeroWeightVerbsAreAbsent) {
  WorkloadOptions opt;
  opt.op_count = 800;
  opt.weights[static_cast<std::size_t>(Verb::kRotate)] = 0;
  opt.weights[static_cast<std::size_t>(Verb::kLcpOmega)] = 0;
  opt.weights[static_cast<std::size_t>(Verb::kMake)] = 0;
  for (const Command& c : random_workload(3, opt)) {
    EXPECT_NE(c.verb, Verb::kRotate);
    EXPECT_NE(c.verb, Verb::kLcpOmega);
    EXPECT_NE(c.verb, Verb::kMake);
  }
  opt.weights.fill(0);
  EXPECT_TRUE(random_workload(3, opt).empty());
}

TEST(Workload, RespectsLimits) {
  WorkloadOptions opt;
  opt.op_count = 2000;
  opt.max_strings = 4;
  opt.max_length = 50;
  opt.make_length = 20;
  opt.alphabet = 5;
  Forest f;
  Interpreter<Forest> interp(f);
  for (const Command& c : random_workload(4, opt)) {
    ASSERT_NO_THROW(interp.execute(c)) << format_command(c);
    EXPECT_LE(f.string_count(), 4u);
    for (const std::string& name : c.names) {
      if (auto id = interp.lookup(name)) {
        EXPECT_LE(f.length(*id), 50u);
      }
    }
    for (Symbol s : c.symbols) {
      EXPECT_GE(s, Symbol{'a'});
      EXPECT_LT(s, Symbol{'a' + 5});
    }
  }
}

}  // namespace
}  // namespace fest
