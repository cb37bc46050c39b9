#include <gtest/gtest.h>

#include <set>

#include "ppav/checks.hpp"

using namespace ppav;

TEST(Catalog, IdsAreUniqueAndKnown) {
  std::set<std::string> ids;
  for (const auto& c : check_catalog()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_TRUE(is_known_check(c.id));
    EXPECT_FALSE(c.summary.empty());
  }
  EXPECT_FALSE(is_known_check("no-such-check"));
}

TEST(Catalog, UnknownIdRejectedBeforeRunning) {
  try {
    run_checks({"lemma-xi-type", "no-such-check"}, CheckOptions{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownCheck);
  }
  EXPECT_THROW(run_check("no-such-check", CheckOptions{}), Error);
}

TEST(Run, ResultsKeepSelectionOrder) {
  const std::vector<std::string> ids{"jacobian-cases", "lemma-xi-type", "degrees"};
  const auto results = run_checks(ids, CheckOptions{});
  ASSERT_EQ(results.size(), ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    EXPECT_EQ(results[k].check_id, ids[k]);
    EXPECT_EQ(results[k].status, CheckStatus::Pass);
    const Json j = to_json(results[k]);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_TRUE(j.contains("elapsed_ms"));
  }
}

TEST(Run, LibraryErrorsBecomeErrorStatus) {
  CheckOptions o;
  o.factors = {2, 3};
  o.ydim = 0;
  const CheckResult r = run_check("standard-build", o);
  EXPECT_EQ(r.status, CheckStatus::Error);
  EXPECT_EQ(to_string(r.status), "error");
}

TEST(Run, SeedIsReported) {
  CheckOptions o;
  o.seed = 17;
  const CheckResult r = run_check("lem-k-property", o);
  EXPECT_EQ(r.status, CheckStatus::Pass);
  EXPECT_EQ(r.witnesses["seed"], 17);
}
