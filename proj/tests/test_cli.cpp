#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "satnum/cli.hpp"
#include "satnum/edge_list.hpp"
#include "satnum/families.hpp"

using namespace satnum;
namespace fam = satnum::family;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("satnum_test_" + name);
}

}  // namespace

TEST_CASE("compute picks a formula when one applies") {
  const auto r = invoke({"compute", "--family", "cycle(7)"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("s: 3\n") != std::string::npos);
  CHECK(r.out.find("method: formula(s-cycle)") != std::string::npos);

  const auto fig = invoke({"compute", "--family", "linkcyc(6,5,1)", "--format",
                           "json"});
  CHECK(fig.code == cli::kOk);
  const auto j = nlohmann::json::parse(fig.out);
  CHECK(j["s"] == 10);
  CHECK(j["method"] == "formula(prop-link-cycles-m0)");
  CHECK(j["witness"].is_null());
}

TEST_CASE("formula lookup") {
  auto id = [](const FamilySpec& s) {
    const auto hit = cli::formula_for(s);
    return hit ? hit->claim_id : std::string("none");
  };
  CHECK(id(fam::tri(3)) == "thm-tn");
  CHECK(id(fam::deledge(fam::path(14), 3, 4)) == "prop-2.2-ii-exact");
  CHECK(cli::formula_for(fam::deledge(fam::path(14), 3, 4))->value == 4);
  CHECK(id(fam::deledge(fam::cycle(9), 3, 4)) == "prop-2.2-i");
  CHECK(id(fam::corona(fam::cycle(5), fam::empty(2))) == "thm-corona-empty");
  CHECK(id(fam::corona(fam::complete(1), fam::wheel(6))) ==
        "ex-k1-corona-wheel");
  CHECK(id(fam::disjoint(fam::path(4), fam::cycle(5))) == "lemma-union");
  CHECK(id(fam::disjoint(fam::path(4), fam::complete(5))) == "none");
  CHECK(id(fam::chaincyc(8, 1, 1)) == "s-cycle");
  CHECK(cli::formula_for(fam::chaincyc(8, 1, 1))->value == 3);
  CHECK(id(fam::chaincyc(8, 3, 4)) == "obs-chain-cycles-m2-d14");
  CHECK(id(fam::linkcyc(14, 2, 6)) == "none");
  CHECK(id(fam::complete(5)) == "none");
}

TEST_CASE("compute methods") {
  const auto exact = invoke({"compute", "--family", "path(7)", "--method",
                             "exact", "--format", "json"});
  CHECK(exact.code == cli::kOk);
  const auto j = nlohmann::json::parse(exact.out);
  CHECK(j["s"] == 2);
  CHECK(j["method"] == "exact");
  CHECK(j["witness"].size() == 2);
  CHECK(j["bounds"]["half_alpha"] == "3/2");

  const auto brute = invoke({"compute", "--family", "path(7)", "--method",
                             "brute"});
  CHECK(brute.code == cli::kOk);
  CHECK(brute.out.find("method: brute_force") != std::string::npos);

  const auto none = invoke({"compute", "--family", "complete(5)", "--method",
                            "formula"});
  CHECK(none.code == cli::kUsage);

  const auto fallback = invoke({"compute", "--family", "complete(5)"});
  CHECK(fallback.code == cli::kOk);
  CHECK(fallback.out.find("method: exact") != std::string::npos);
}

TEST_CASE("compute from a file") {
  const auto path = temp_path("g10.el");
  {
    std::ofstream f(path);
    f << "# ten vertices\n10 10\n";
    for (int v = 0; v < 10; ++v) f << v << ' ' << (v + 1) % 10 << '\n';
  }
  const auto r = invoke({"compute", "--graph", path.string(), "--method",
                         "exact", "--format", "json"});
  CHECK(r.code == cli::kOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["s"] == 4);
  CHECK(j["vertices"] == 10);
  CHECK(j["witness"].size() == 4);
  std::filesystem::remove(path);
}

TEST_CASE("generate writes the edge-list format") {
  const auto r = invoke({"generate", "tri(3)"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.rfind("7 9\n", 0) == 0);

  const auto path = temp_path("corona.el");
  CHECK(invoke({"generate", "corona(path(2),empty(2))", path.string()}).code ==
        cli::kOk);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "6 5");
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"generate", "cycle(2)"}).code == cli::kUsage);
  const auto parse = invoke({"compute", "--family", "corona(path(2)"});
  CHECK(parse.code == cli::kUsage);
  CHECK(parse.err.find("offset 15") != std::string::npos);
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"compute"}).code == cli::kUsage);
  CHECK(invoke({"compute", "--family", "path(3)", "--graph", "x.el"}).code ==
        cli::kUsage);
  CHECK(invoke({"compute", "--family", "path(3)", "--method", "fast"}).code ==
        cli::kUsage);
  CHECK(invoke({"compute", "--family", "path(3)", "--cap-n", "0"}).code ==
        cli::kUsage);

  const auto cap = invoke({"compute", "--family", "path(40)", "--method",
                           "exact"});
  CHECK(cap.code == cli::kResource);
  CHECK(cap.err.find("exact-vertices") != std::string::npos);
  const auto brute = invoke({"compute", "--family", "path(26)", "--method",
                             "brute"});
  CHECK(brute.code == cli::kResource);
  CHECK(brute.err.find("brute-edges") != std::string::npos);
  CHECK(invoke({"compute", "--family", "path(26)", "--method", "brute",
                "--cap-edges", "25"})
            .code == cli::kOk);
  CHECK(invoke({"generate", "path(70)"}).code == cli::kResource);
}

TEST_CASE("audit subcommand") {
  const auto single = invoke({"audit", "--claim", "s-path"});
  CHECK(single.code == cli::kOk);
  CHECK(single.out.find("s-path") != std::string::npos);

  const auto empty_manifest = temp_path("empty_manifest.txt");
  { std::ofstream f(empty_manifest); }
  const auto mismatch = invoke({"audit", "--claim", "prop-2.2-ii-paper",
                                "--manifest", empty_manifest.string()});
  CHECK(mismatch.code == cli::kAuditMismatch);
  CHECK(mismatch.err.find("+ prop-2.2-ii-paper n=14 i=4") != std::string::npos);

  const auto json = invoke({"audit", "--claim", "fig-captions", "--format",
                            "json", "--manifest", empty_manifest.string()});
  CHECK(json.code == cli::kOk);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["claims"][0]["rows"].size() == 5);
  CHECK(j["manifest"]["match"] == true);
  std::filesystem::remove(empty_manifest);

  CHECK(invoke({"audit", "--claim", "bogus"}).code == cli::kUsage);
}
