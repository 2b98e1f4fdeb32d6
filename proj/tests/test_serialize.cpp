#include <catch_amalgamated.hpp>

#include "testutil.hpp"
#include "zemm/catalog.hpp"
#include "zemm/serialize.hpp"

using namespace zemm;

TEST_CASE("cycle matrix JSON shape") {
  const Multigraph g = test::theta();
  const CycleMatrix m = cycle_matrix(g, spanning_forest(g));
  const Json j = to_json(m);
  CHECK(j.at("rows") == 2);
  CHECK(j.at("cols") == 3);
  CHECK(j.at("col_order").size() == 3);
  CHECK(j.at("entries").size() == 6);  // row-major
}

TEST_CASE("gram JSON round-trips") {
  const GramMatrix m = *catalog_get("F14").reference_gram;
  CHECK(gram_from_json(to_json(m)) == m);
  CHECK_THROWS_AS(gram_from_json(Json{{"dim", 2}, {"entries", {2, 0, 0}}}),
                  std::invalid_argument);
}

TEST_CASE("zemm result JSON carries the documented fields") {
  const ZemmResult r = solve_zemm(catalog_get("loop").graph);
  const Json j = to_json("loop", r);
  CHECK(j.at("graph") == "loop");
  CHECK(j.at("status") == "Found");
  CHECK(j.at("gram").at("dim") == 1);
  CHECK(j.at("lattice").at("kind") == "A");
  CHECK(j.at("nodes_explored").is_number());
  // Unsat-like payloads keep the keys with null values
  ZemmResult unsat;
  unsat.status = SolveStatus::Unsat;
  const Json ju = to_json("x", unsat);
  CHECK(ju.at("gram").is_null());
  CHECK(ju.at("lattice").is_null());
}

TEST_CASE("serialization is byte-stable") {
  const ZemmResult a = solve_zemm(catalog_get("F11").graph);
  const ZemmResult b = solve_zemm(catalog_get("F11").graph);
  CHECK(to_json("F11", a).dump() == to_json("F11", b).dump());
}
