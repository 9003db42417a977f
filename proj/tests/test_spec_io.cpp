#include <doctest.h>

#include <fstream>

#include "mini_schema.hpp"
#include "pqw/families.hpp"
#include "pqw/report.hpp"
#include "pqw/spec_io.hpp"

using namespace pqw;
using nlohmann::json;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  return json::parse(in);
}

const std::string kData = PQW_DATA_DIR;
const std::string kSchema = PQW_SCHEMA_DIR;

}  // namespace

TEST_CASE("bundled spec files parse and validate") {
  for (const char* name : {"x-family-n2.json", "x-family-n3.json", "y-family-n2.json",
                           "y-family-n3.json", "x-factor-n1.json"}) {
    SpecDocument doc = load_spec_document(kData + "/" + name);
    CHECK(doc.spec.n() >= 1);
    for (const Factor& f : doc.spec.factors) CHECK(f.genus == 3);
  }
  SpecDocument x3 = load_spec_document(kData + "/x-family-n3.json");
  REQUIRE(x3.subgroup.has_value());
  CHECK(x3.subgroup->size() == 4);
}

TEST_CASE("bundled X file agrees with the generated family") {
  SpecDocument doc = load_spec_document(kData + "/x-family-n3.json");
  ProductQuotientSpec gen = x_family(3);
  REQUIRE(doc.spec.n() == gen.n());
  for (int i = 0; i < gen.n(); ++i) {
    CHECK(doc.spec.factors[std::size_t(i)].vector.images ==
          gen.factors[std::size_t(i)].vector.images);
    CHECK(doc.spec.factors[std::size_t(i)].branch.indices ==
          gen.factors[std::size_t(i)].branch.indices);
  }
}

TEST_CASE("validation errors carry field paths") {
  json j = load_json(kData + "/x-family-n3.json");
  j["factors"][2]["vector"][2] = "(1,1)";  // product no longer the identity
  CHECK_THROWS_WITH_AS(parse_spec_document(j), doctest::Contains("long relator"),
                       ValidationError);

  json bad_label = load_json(kData + "/x-family-n2.json");
  bad_label["factors"][0]["vector"][0] = "(9,9)";
  CHECK_THROWS_WITH_AS(parse_spec_document(bad_label),
                       doctest::Contains("factors[0].vector[0]"), ValidationError);

  json bad_branch = load_json(kData + "/x-family-n2.json");
  bad_branch["factors"][1]["branch_indices"] = {4, 4, 2};
  CHECK_THROWS_WITH_AS(parse_spec_document(bad_branch),
                       doctest::Contains("factors[1].branch_indices"), ValidationError);

  json no_group = json::object();
  no_group["factors"] = json::array();
  CHECK_THROWS_AS(parse_spec_document(no_group), ValidationError);
}

TEST_CASE("explicit table groups are accepted") {
  json j;
  j["label"] = "table group";
  j["group"]["table"] = {{0, 1}, {1, 0}};
  j["group"]["labels"] = {"e", "t"};
  // A Z_2 factor cannot satisfy genus >= 2 with branch data over P^1, so this
  // must fail at the genus check, proving the table was parsed.
  j["factors"] = json::array();
  json f;
  f["base_genus"] = 0;
  f["branch_indices"] = {2, 2};
  f["vector"] = {"t", "t"};
  j["factors"].push_back(f);
  CHECK_THROWS_WITH_AS(parse_spec_document(j), doctest::Contains("genus"), ValidationError);
}

TEST_CASE("limits parsing") {
  EnumerationLimits base;
  EnumerationLimits l = parse_limits("max-cosets=100,max-relators=5", base);
  CHECK(l.max_cosets == 100);
  CHECK(l.max_relators == 5);
  CHECK(parse_limits("max-definitions=7", base).definition_budget() == 7);
  CHECK_THROWS_AS(parse_limits("max-cosets", base), ValidationError);
  CHECK_THROWS_AS(parse_limits("max-cosets=x", base), ValidationError);
  CHECK_THROWS_AS(parse_limits("nope=3", base), ValidationError);
  CHECK_THROWS_AS(parse_limits("max-cosets=-2", base), ValidationError);
}

TEST_CASE("reports validate against the shipped schema") {
  json schema = load_json(kSchema + "/report-v1.json");
  ProductQuotientSpec spec = x_family(2);
  Census census = singular_census(spec);
  Pi1Result pi1 = armstrong_pi1(spec);
  ReportOptions ropt{true};

  json blocks;
  blocks["spec"] = spec_echo_json(spec);
  blocks["invariants"] = invariants_json(spec, census);
  blocks["pi1"] = pi1_json(pi1, ropt);
  blocks["universal_cover"] =
      universal_cover_json(universal_cover_report(spec, pi1, census));
  EtaleCover cover = etale_intermediate_cover(spec, subgroup_h_elements(spec.group));
  blocks["cover"] = cover_json(cover);
  json report = make_report("invariants", blocks, EnumerationLimits{}, ropt, 1.5);

  std::vector<std::string> errors = testing::schema_errors(report, schema);
  for (const std::string& e : errors) MESSAGE(e);
  CHECK(errors.empty());

  // Sanity: the validator does reject broken documents.
  json broken = report;
  broken["pi1"]["status"] = "maybe";
  CHECK(!testing::schema_errors(broken, schema).empty());
  broken = report;
  broken.erase("limits");
  CHECK(!testing::schema_errors(broken, schema).empty());
}

TEST_CASE("fermat report block validates") {
  json schema = load_json(kSchema + "/report-v1.json");
  FermatReport rep = verify_fixed_point_table(fermat_group());
  json blocks;
  blocks["fermat"] = fermat_json(rep);
  blocks["abstract_coordinate_bijection"] = "pass";
  json report = make_report("fermat-verify", blocks, EnumerationLimits{}, ReportOptions{false}, 0);
  CHECK(testing::schema_errors(report, schema).empty());
  CHECK(!report.contains("timing"));
}

TEST_CASE("reports are deterministic without timing") {
  ProductQuotientSpec spec = y_family(2);
  ReportOptions ropt{false};
  auto build = [&] {
    json blocks;
    blocks["spec"] = spec_echo_json(spec);
    blocks["invariants"] = invariants_json(spec, singular_census(spec));
    blocks["pi1"] = pi1_json(armstrong_pi1(spec), ropt);
    return make_report("invariants", blocks, EnumerationLimits{}, ropt, 123.0).dump(2);
  };
  CHECK(build() == build());
}
