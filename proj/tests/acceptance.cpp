// Acceptance gate: runs every check in the verification ledger at full scale
// and prints one pass/fail line per claim.  Exit status is nonzero iff any
// claim fails.  An optional argument selects the scale ("tiny" | "default").

#include <cstdio>
#include <string>

#include "btl/claims.hpp"

int main(int argc, char** argv) {
  std::string scale_name = argc > 1 ? argv[1] : "default";
  auto scale = btl::claims::scale_from_name(scale_name);
  auto results = btl::claims::run_claims(scale, "", /*seed=*/0);

  int failures = 0;
  for (const auto& r : results) {
    std::printf("%s %s: %s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(), r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%zu claims, %d failures (scale=%s)\n", results.size(), failures,
              scale_name.c_str());
  return failures == 0 ? 0 : 1;
}
