#include <doctest.h>

#include <sstream>

#include "btl/core.hpp"
#include "btl/instances.hpp"
#include "btl/io.hpp"
#include "btl/monotone.hpp"
#include "btl/rng.hpp"

using namespace btl;

TEST_CASE("truth table round trip, plain and hex-packed") {
  Stream rng(8);
  BFunc f;
  f.n = 6;
  f.values.resize(64);
  for (auto& v : f.values) v = rng.coin() ? 1 : -1;

  for (bool packed : {false, true}) {
    std::stringstream ss;
    write_truth_table(ss, f, packed);
    CHECK(read_truth_table(ss) == f);
  }

  BFunc g = build_mono_gadget(gen_sparse_instance(2, 5, 2, true, 3));
  std::stringstream ss;
  write_truth_table(ss, g);
  CHECK(read_truth_table(ss) == g);
  std::stringstream bad;
  CHECK_THROWS(write_truth_table(bad, g, /*hex_packed=*/true));  // extended range
}

TEST_CASE("truth table reader rejects malformed input") {
  std::stringstream empty;
  CHECK_THROWS(read_truth_table(empty));
  std::stringstream bad_header("n=2 flavor=spicy\n1 1 1 1\n");
  CHECK_THROWS(read_truth_table(bad_header));
  std::stringstream truncated("n=3 range=pm_one\n1 -1 1\n");
  CHECK_THROWS(read_truth_table(truncated));
  std::stringstream bad_value("n=2 range=pm_one\n1 -1 3 1\n");
  CHECK_THROWS(read_truth_table(bad_value));
}

TEST_CASE("instance JSON round trip") {
  for (uint64_t s = 0; s < 20; ++s) {
    auto inst = gen_sparse_instance(4, 6, 2, s % 2 == 0, s);
    DisjInstance back = instance_from_json(instance_to_json(inst));
    CHECK(back.ell == inst.ell);
    CHECK(back.m == inst.m);
    CHECK(back.k == inst.k);
    CHECK((back.promise == Promise::SparseK) == (inst.promise == Promise::SparseK));
    CHECK(back.x_blocks == inst.x_blocks);
    CHECK(back.y_blocks == inst.y_blocks);
  }
  CHECK_THROWS(instance_from_json("{\"ell\": 2}"));
}

TEST_CASE("spectrum CSV carries mask, set size, and numerator") {
  Spectrum s;
  s.n = 2;
  s.coeffs = {0, 4, 0, -4};
  std::ostringstream os;
  write_spectrum_csv(os, s, /*include_zeros=*/false);
  CHECK(os.str() == "mask,setsize,coeff_numerator\n1,1,4\n3,2,-4\n");
  std::ostringstream oz;
  write_spectrum_csv(oz, s, /*include_zeros=*/true);
  CHECK(oz.str() ==
        "mask,setsize,coeff_numerator\n0,0,0\n1,1,4\n2,1,0\n3,2,-4\n");
}

TEST_CASE("violation report JSON includes counts and bounds") {
  BFunc h = build_mono_gadget(gen_sparse_instance(2, 5, 2, true, 11));
  ViolationReport rep = violation_report(h, 1, true);
  DistanceBounds bounds = distance_bounds_general(h);
  std::string j = violation_report_to_json(rep, &bounds);
  CHECK(j.find("violated_by_direction") != std::string::npos);
  CHECK(j.find("distance_lower") != std::string::npos);
  CHECK(j.find("violated_pair_count") != std::string::npos);
}
