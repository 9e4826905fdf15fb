#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "rlab/errors.hpp"
#include "rlab/generators.hpp"
#include "rlab/io_json.hpp"
#include "rlab/negative_type.hpp"
#include "rlab/roundness.hpp"
#include "support.hpp"

using namespace rlab;

TEST_CASE("space JSON round-trips without loss") {
  auto space = lp_sample(3, 6, 1.7, 99);
  json j = space_to_json(space);
  auto back = space_from_json(j);
  CHECK(back.labels == space.labels);
  CHECK(testsupport::exact_equal(back.dist, space.dist));

  // through an actual file, including full double round-trip
  std::string path = "test_space_tmp.json";
  save_space(space, path);
  auto loaded = load_space(path);
  CHECK(testsupport::exact_equal(loaded.dist, space.dist));
  std::remove(path.c_str());
}

TEST_CASE("loader refuses invalid metrics unless forced") {
  json j;
  j["labels"] = {"a", "b"};
  j["dist"] = {{0.0, 1.0}, {2.0, 0.0}};
  CHECK_THROWS_AS(space_from_json(j), ValidationError);
  auto forced = space_from_json(j, true);
  CHECK(forced.dist(1, 0) == 2.0);
}

TEST_CASE("loader rejects malformed documents") {
  json j;
  j["labels"] = {"a", "b"};
  j["dist"] = {{0.0, 1.0}};
  CHECK_THROWS_AS(space_from_json(j), ValidationError);
  CHECK_THROWS_AS(space_from_json(json::array()), ValidationError);
  CHECK_THROWS_AS(load_space("no_such_file.json"), ValidationError);
}

TEST_CASE("negative-type certificates round-trip with witnesses") {
  auto path3 = path_graph(3);
  Kernel k = power_transform(path3.space, 2.2);
  auto cert = is_negative_type(k);
  json j = certificate_to_json(cert);
  auto back = certificate_from_json(j);
  CHECK(back.is_negative_type == cert.is_negative_type);
  CHECK(back.extremal_value == cert.extremal_value);
  CHECK(back.tol == cert.tol);
  REQUIRE(back.witness.has_value());
  CHECK(back.witness->isApprox(*cert.witness, 0.0));
}

TEST_CASE("p* results round-trip") {
  auto res = supremal_p(cycle_graph(4).space);
  json j = pstar_to_json(res);
  auto back = pstar_from_json(j);
  CHECK(back.p_star == res.p_star);
  CHECK(back.capped == res.capped);
  CHECK(back.lower_certificate.extremal_value ==
        res.lower_certificate.extremal_value);
  REQUIRE(back.upper_certificate.has_value());
  CHECK(back.upper_certificate->extremal_value ==
        res.upper_certificate->extremal_value);
}

TEST_CASE("violation certificates round-trip") {
  ViolationCertificate cert;
  cert.config = {{0, 2}, {1, 1}};
  cert.p = 2.2;
  cert.deficiency = -0.5947934199881404;
  auto back = violation_from_json(violation_to_json(cert));
  CHECK(back.config.a == cert.config.a);
  CHECK(back.config.b == cert.config.b);
  CHECK(back.p == cert.p);
  CHECK(back.deficiency == cert.deficiency);
}

TEST_CASE("manifest serialization carries every field") {
  RunManifest m;
  m.command = "gr";
  m.parameters = {{"tol", 1e-6}};
  m.seed = 17;
  m.tool_version = "0.1.0";
  m.wall_clock_ms = 12.5;
  m.input_hashes["x.json"] = "fnv1a:0123456789abcdef";
  json j = manifest_to_json(m);
  CHECK(j.at("command") == "gr");
  CHECK(j.at("seed") == 17);
  CHECK(j.at("input_hashes").at("x.json") == "fnv1a:0123456789abcdef");
}

TEST_CASE("file hashing is content-determined") {
  std::string a = "test_hash_a.tmp";
  std::string b = "test_hash_b.tmp";
  {
    std::ofstream(a) << "same bytes";
    std::ofstream(b) << "same bytes";
  }
  CHECK(fnv1a_file_hash(a) == fnv1a_file_hash(b));
  {
    std::ofstream(b) << "different";
  }
  CHECK(fnv1a_file_hash(a) != fnv1a_file_hash(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}
