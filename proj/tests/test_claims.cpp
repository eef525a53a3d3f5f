#include <algorithm>
#include <set>

#include "doctest.h"
#include "satnum/claims.hpp"
#include "support/oracles.hpp"

using namespace satnum;
using namespace satnum::claims;

namespace {

const ClaimReport* find_row(const std::vector<ClaimReport>& rows,
                            const Params& params) {
  for (const auto& r : rows) {
    if (r.params == params) return &r;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("catalog ids are unique and resolvable") {
  std::set<std::string> ids;
  for (const auto& c : catalog()) {
    CHECK(ids.insert(c.id).second);
    CHECK(find_claim(c.id) == &c);
    CHECK_FALSE(c.statement.empty());
    CHECK_FALSE(c.params.empty());
  }
  CHECK(find_claim("no-such-claim") == nullptr);
  for (const char* id :
       {"s-path", "s-cycle", "s-wheel", "lemma-union", "prop-2.2-i",
        "prop-2.2-ii-paper", "prop-2.2-ii-exact", "thm-corona-empty",
        "thm-corona-path", "thm-corona-cycle", "prop-k1-corona",
        "prop-kbar-corona", "cor-corona-bounds", "prop-link-paths",
        "obs-chain-paths", "obs-chain-cycles-m2-d14", "fig-captions",
        "text-link-examples", "thm-tn", "thm-on"}) {
    CHECK_MESSAGE(ids.count(id) == 1, id);
  }
}

TEST_CASE("run_claim on cycles") {
  const auto rows = run_claim("s-cycle", {{"n", {"n", 3, 12}}});
  REQUIRE(rows.size() == 10);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].params == Params{{"n", static_cast<std::int64_t>(i) + 3}});
    CHECK(rows[i].status == RowStatus::kCompared);
    CHECK(rows[i].agree);
    CHECK(rows[i].formula == rows[i].exact);
  }
}

TEST_CASE("published deleted-edge table disagrees at n=14, i=4") {
  const auto rows = run_claim("prop-2.2-ii-paper", {{"n", {"n", 3, 14}}});
  const auto* row = find_row(rows, {{"n", 14}, {"i", 4}});
  REQUIRE(row != nullptr);
  CHECK_FALSE(row->agree);
  CHECK(row->formula == 5);
  CHECK(row->exact == 4);
  CHECK(row->witness.size() == 4);
  CHECK(row->exact ==
        testing::oracle_path_saturation(4) + testing::oracle_path_saturation(10));
}

TEST_CASE("exact deleted-edge formula agrees everywhere") {
  const auto rows = run_claim("prop-2.2-ii-exact", {{"n", {"n", 3, 18}}});
  CHECK(rows.size() == 153 - 1);
  for (const auto& r : rows) CHECK(r.agree);
}

TEST_CASE("overrides are validated") {
  CHECK_THROWS_AS(run_claim("no-such-claim"), std::invalid_argument);
  CHECK_THROWS_AS(run_claim("s-path", {{"m", {"m", 1, 2}}}),
                  std::invalid_argument);
  CHECK(run_claim("s-path", {{"n", {"n", 5, 4}}}).empty());
}

TEST_CASE("rows above the cap are skipped, not failed") {
  AuditConfig config;
  config.caps.exact_vertices = 10;
  const auto rows = run_claim("s-path", {}, config);
  std::size_t skipped = 0;
  for (const auto& r : rows) {
    if (r.status == RowStatus::kCapSkipped) {
      ++skipped;
      CHECK_FALSE(r.message.empty());
    }
  }
  CHECK(skipped == 8);
  const auto summary = summarize(*find_claim("s-path"), rows);
  CHECK(summary.skipped == 8);
  CHECK(summary.agree == 10);
  CHECK(summary.counterexamples.empty());
}

TEST_CASE("run_all highlights") {
  const auto summary = run_all({}, {"thm-tn", "fig-captions", "text-link-examples"});
  REQUIRE(summary.claims.size() == 3);
  const auto& tn = summary.claims[0];
  CHECK(tn.agree == 8);
  CHECK(tn.disagree == 0);

  const auto& figs = summary.claims[1];
  CHECK(figs.disagree == 0);
  std::vector<std::int64_t> exact;
  for (const auto& r : figs.rows) exact.push_back(r.exact);
  CHECK(exact == std::vector<std::int64_t>{10, 13, 11, 13, 13});

  // Every quoted mixed link value is realized by some attach choice.
  const auto& text = summary.claims[2];
  CHECK(text.counterexamples.empty());
  CHECK(text.agree > 0);
}

TEST_CASE("empty catalog gives an empty summary") {
  const auto summary = run_all(std::vector<Claim>{});
  CHECK(summary.claims.empty());
  CHECK(summary.counterexamples().empty());
  CHECK(to_json(summary)["claims"].empty());
}

TEST_CASE("reports are deterministic across thread counts") {
  AuditConfig one;
  one.threads = 1;
  AuditConfig many;
  many.threads = 4;
  const std::vector<std::string> ids = {"prop-2.2-ii-paper", "lemma-union",
                                        "obs-chain-cycles-m2-d14"};
  const auto a = to_json(run_all(one, ids)).dump();
  const auto b = to_json(run_all(many, ids)).dump();
  CHECK(a == b);
}

TEST_CASE("manifest parsing and comparison") {
  const auto keys = parse_manifest("# header\n\nalpha n=1\n  beta n=2  \r\n#x\n");
  CHECK(keys == std::set<std::string>{"alpha n=1", "beta n=2"});

  const std::set<std::string> observed = {"alpha n=1", "gamma n=3"};
  const auto diff = compare(observed, keys, {"alpha", "beta", "gamma"});
  CHECK(diff.unexpected == std::set<std::string>{"gamma n=3"});
  CHECK(diff.missing == std::set<std::string>{"beta n=2"});
  CHECK_FALSE(diff.empty());

  // Entries for claims that were not run are ignored.
  CHECK(compare({"alpha n=1"}, keys, {"alpha"}).empty());
  CHECK(row_key("s-path", {{"n", 4}}) == "s-path n=4");
}

TEST_CASE("json rows") {
  const auto rows = run_claim("prop-2.2-ii-paper", {{"n", {"n", 14, 14}}});
  const auto* row = find_row(rows, {{"n", 14}, {"i", 4}});
  REQUIRE(row != nullptr);
  const auto j = to_json(*row);
  CHECK(j["params"]["n"] == 14);
  CHECK(j["formula"] == 5);
  CHECK(j["exact"] == 4);
  CHECK(j["agree"] == false);
  CHECK(j["witness"].size() == 4);
  CHECK(j["status"] == "compared");
}
