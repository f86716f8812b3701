#pragma once

#include <cstdint>
#include <string>
#include <vector>

// The verification ledger: every headline construction property, implemented
// as an executable check with its tolerance pinned in code.  Shared by the
// `verify-claims` CLI subcommand and the acceptance test binary.

namespace btl::claims {

enum class Scale { Tiny, Default };

struct ClaimResult {
  std::string id;
  bool pass = false;
  std::string detail;  // computed vs required values
};

std::vector<std::string> claim_ids();

// Runs every claim whose id matches `filter` (empty = all).  Unknown filters
// yield an empty result set.
std::vector<ClaimResult> run_claims(Scale scale, const std::string& filter, uint64_t seed);

Scale scale_from_name(const std::string& name);  // "tiny" | "default"

}  // namespace btl::claims
