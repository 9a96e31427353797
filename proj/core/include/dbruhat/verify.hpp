#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dbruhat/root_system.hpp"

namespace dbruhat {

struct VerifyOptions {
  std::optional<std::string> window;  // defaults to "2rho"
  unsigned threads = 1;
  bool force = false;  // lift the rank cap
};

struct SuiteSummary {
  std::string suite;
  std::uint64_t checks = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
  nlohmann::json stats = nlohmann::json::object();
  std::vector<nlohmann::json> counterexamples;  // first few only
  bool ok() const { return failed == 0; }
};

inline constexpr int kVerifyRankCap = 4;
inline constexpr std::size_t kMaxCounterexamples = 20;

const std::vector<std::string>& suite_names();  // "all" excluded

// Runs one suite (or every suite for "all"). Probes fan out over
// opts.threads workers; results are merged in probe order, so the summary
// does not depend on the thread count.
std::vector<SuiteSummary> run_verify(const std::string& suite, const RootSystem& R, const VerifyOptions& opts);

nlohmann::json to_json(const SuiteSummary& s);

// Thread count from DBRUHAT_THREADS, else 1.
unsigned default_threads();

}  // namespace dbruhat
