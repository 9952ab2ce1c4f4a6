#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "swalk/corpus.hpp"
#include "swalk/walk.hpp"

namespace swalk {

struct SuiteBounds {
  std::size_t max_len = 6;
  std::size_t factor_len = 3;
  std::size_t verify_len = 6;
  std::size_t walk_bound = 4;
  std::size_t prefix_bound = 2;
};

struct SuiteResult {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  /// First few failures, described.
  std::vector<std::string> samples{};
  /// Extra counters worth printing, e.g. how many oracles met a hypothesis.
  std::vector<std::pair<std::string, std::uint64_t>> counters{};

  bool passed() const noexcept { return failures == 0; }
};

/// Negative walks of every signature are rotation closed and satisfy the
/// exclusive 3-walk property.
SuiteResult run_forward_suite(const std::vector<GraphPtr>& corpus, const SuiteBounds& bounds);

/// decide_realizable on every signature-induced set returns a verified
/// signature that is switching equivalent to the original.
SuiteResult run_roundtrip_suite(const std::vector<GraphPtr>& corpus, const SuiteBounds& bounds);

/// Oracles passing the 3-walk check also pass its four consequences at
/// max-len 2 * factor-len. Oracles: every signature-induced set and every
/// counterexample set.
SuiteResult run_consequences_suite(const std::vector<GraphPtr>& corpus, const SuiteBounds& bounds);

/// Oracles passing rotation closure and the 3-walk check also pass
/// conjugation invariance at (walk_bound, prefix_bound).
SuiteResult run_conjugation_suite(const std::vector<GraphPtr>& corpus, const SuiteBounds& bounds);

/// Switching preserves negative walk sets, and the cut-based equivalence test
/// agrees with exhaustive search over switching sets.
SuiteResult run_switching_suite(const std::vector<GraphPtr>& corpus, const SuiteBounds& bounds);

/// For every (G, sigma, v0) with v0 on a negative closed walk, the
/// counterexample set passes the 3-walk check, fails rotation closure, and is
/// refuted for every signature.
SuiteResult run_counterexample_family_suite(const std::vector<GraphPtr>& corpus, const SuiteBounds& bounds);

std::vector<std::string_view> suite_names();

/// theorem-nc runs the forward and round-trip suites; the other names map to
/// one suite each. Throws GraphError for an unknown name.
std::vector<SuiteResult> run_named_suite(std::string_view name, const std::vector<GraphPtr>& corpus,
                                         const SuiteBounds& bounds);

/// "V={v0,v1} E={e01:v0-v1}"
std::string describe_graph(const Multigraph& g);

}  // namespace swalk
