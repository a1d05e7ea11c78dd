#include "chamberworks/facts.hpp"
#include "chamberworks/prng.hpp"
#include "chamberworks/sweep.hpp"

#include "doctest.h"

using namespace chamberworks;

TEST_CASE("subcomplex JSON round trip") {
  auto cc = build_named_complex("B", 3);
  Subcomplex k = make_subcomplex(*cc, {cc->first_chamber(),
                                       cc->first_chamber() + 5});
  ordered_json j = subcomplex_to_json(*cc, k);
  std::string err;
  CHECK(validate_against_schema(j, "subcomplex", &err));
  Subcomplex back = subcomplex_from_json(*cc, j);
  CHECK(back == k);
}

TEST_CASE("subcomplex file validation failures") {
  auto cc = build_named_complex("B", 3);
  ordered_json bad1 = {{"complex", "B"}, {"rank", 3}};
  CHECK_THROWS(subcomplex_from_json(*cc, bad1)); // missing faces
  ordered_json bad2 = {{"complex", "A"}, {"rank", 3},
                       {"faces", ordered_json::array()}};
  CHECK_THROWS(subcomplex_from_json(*cc, bad2)); // wrong complex
  ordered_json bad3 = {{"complex", "B"},
                       {"rank", 3},
                       {"faces", {{0, 999999}}}};
  CHECK_THROWS(subcomplex_from_json(*cc, bad3)); // vertex out of range
  ordered_json bad4 = {{"complex", "B"},
                       {"rank", 3},
                       {"faces", {{0, cc->antipode_of(0)}}}};
  CHECK_THROWS(subcomplex_from_json(*cc, bad4)); // not a face
}

TEST_CASE("verdict JSON carries the witness and validates") {
  auto cc = build_named_complex("B", 3);
  Subcomplex k = make_subcomplex(*cc, {cc->first_chamber()});
  VerdictResult v = verdict(*cc, k);
  ordered_json j = verdict_to_json(*cc, v);
  std::string err;
  CHECK(validate_against_schema(j, "verdict", &err));
  CHECK(j["verdict"] == "fixed_face");
  CHECK(j["witness"].contains("face"));
  CHECK(j["witness"].contains("point"));
}

TEST_CASE("fact report JSON validates and is deterministic") {
  FactReport r1 = run_facts("b", 3, false);
  FactReport r2 = run_facts("b", 3, false);
  ordered_json j1 = facts_to_json(r1), j2 = facts_to_json(r2);
  CHECK(j1.dump() == j2.dump()); // byte-identical reports
  std::string err;
  CHECK(validate_against_schema(j1, "facts", &err));
}

TEST_CASE("sweep JSON validates; sampled sweeps reproduce exactly") {
  auto cc = build_named_complex("A", 3);
  SweepOptions opt;
  opt.max_seed_faces = 2;
  opt.samples = 25;
  opt.seed = 42;
  SweepSummary s1 = sweep(*cc, opt);
  SweepSummary s2 = sweep(*cc, opt);
  ordered_json j1 = sweep_to_json(*cc, opt, s1);
  ordered_json j2 = sweep_to_json(*cc, opt, s2);
  CHECK(j1.dump() == j2.dump());
  std::string err;
  CHECK(validate_against_schema(j1, "sweep", &err));
  CHECK(s1.counterexample == 0);
  // a different seed draws different seeds
  opt.seed = 43;
  SweepSummary s3 = sweep(*cc, opt);
  CHECK(s3.counterexample == 0);
}

TEST_CASE("counter PRNG is stable across calls") {
  CHECK(PRNG::at(7, 0) == PRNG::at(7, 0));
  CHECK(PRNG::at(7, 0) != PRNG::at(8, 0));
  PRNG a(123), b(123);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
}

TEST_CASE("exhaustive sweep budget is enforced") {
  auto cc = build_named_complex("B", 3);
  SweepOptions opt;
  opt.max_seed_faces = 2;
  opt.exhaustive_cap = 10; // far below the orbit count
  CHECK_THROWS(sweep(*cc, opt));
  opt.max_seed_faces = 3; // exhaustive triples unsupported
  opt.exhaustive_cap = 200000;
  CHECK_THROWS(sweep(*cc, opt));
}
