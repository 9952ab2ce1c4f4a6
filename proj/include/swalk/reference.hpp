#pragma once

// Serial, definition-by-definition versions of the parallel kernels. They
// build every walk product explicitly and exist to cross-check the fast paths
// in tests and benchmarks.

#include <optional>
#include <vector>

#include "swalk/checks.hpp"

namespace swalk::reference {

CheckReport check_rotation_closed(const WalkSetOracle& oracle, std::size_t max_len,
                                  const EnumerationLimits& limits = {});

/// Enumerates all ordered triples and concatenates W_i W_j^-1 per triple.
CheckReport check_exclusive_3walk(const WalkSetOracle& oracle, std::size_t factor_len,
                                  const EnumerationLimits& limits = {});

/// First closed walk (length <= max_len, enumeration order) where the negative
/// walks of `sig` disagree with the oracle. Throws UnknownMembershipError.
std::optional<Walk> first_disagreement(const Signature& sig, const WalkSetOracle& oracle, std::size_t max_len,
                                       const EnumerationLimits& limits = {});

/// One entry per signature in enumeration order.
std::vector<std::optional<Walk>> refute_all(const WalkSetOracle& oracle, std::size_t max_len,
                                            const EnumerationLimits& limits = {});

/// Exhaustive search over all 2^|V| switching sets (|V| <= 20).
std::optional<std::vector<VertexIndex>> switching_equivalent(const Signature& a, const Signature& b);

}  // namespace swalk::reference
