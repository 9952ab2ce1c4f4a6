#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swalk/walkset.hpp"

namespace swalk {

/// A pass only holds up to the bound it was run at; a fail is unconditional.
enum class Verdict : std::uint8_t { pass, fail, inconclusive };

std::string_view to_string(Verdict v) noexcept;

struct NamedWalk {
  std::string name;
  Walk walk;
};

/// The walks behind a failure and the violated identity, instantiated.
struct Witness {
  std::vector<NamedWalk> walks;
  std::string identity;
};

struct CheckReport {
  std::string property;
  Verdict verdict = Verdict::pass;
  std::uint64_t checked = 0;
  std::optional<Witness> witness;
  /// Human-readable bound, e.g. "max-len 6" or "walk-bound 4, prefix-bound 2".
  std::string bound;
  /// Sub-checks, for properties made of several items.
  std::vector<CheckReport> parts;

  bool passed() const noexcept { return verdict == Verdict::pass; }
  bool failed() const noexcept { return verdict == Verdict::fail; }
};

// Every checker scans walks shortest first, stable over enumeration order, and
// reports the first failure in that order whatever the thread count.

/// Membership is invariant under every rotation of every closed walk of
/// length <= max_len. Witness: W and the rotation R that disagrees.
CheckReport check_rotation_closed(const WalkSetOracle& oracle, std::size_t max_len,
                                  const EnumerationLimits& limits = {});

/// For every ordered vertex pair (x, y) and every ordered triple of xy-walks of
/// length <= factor_len (repeats and trivial walks included), an even number of
/// W1 W2^-1, W1 W3^-1, W2 W3^-1 are members.
///
/// Evaluates each pairwise product once into a sign matrix and then tests all
/// triples row against row; rows are processed in parallel.
CheckReport check_exclusive_3walk(const WalkSetOracle& oracle, std::size_t factor_len,
                                  const EnumerationLimits& limits = {});

/// The four consequences of the 3-walk property, with W, W' of length <= max_len / 2:
///  (i) no trivial walk is a member; (ii) W W^-1 is never a member;
///  (iii) sigma(W) = sigma(W^-1) for closed W; (iv) sigma(W W') = sigma(W) sigma(W')
///  for closed W, W' at a common vertex. One part per item; the report carries
///  the first failing item's witness.
CheckReport check_three_walk_consequences(const WalkSetOracle& oracle, std::size_t max_len,
                                          const EnumerationLimits& limits = {});

/// sigma(P W P^-1) = sigma(W) for every closed W (length <= walk_bound) at y and
/// every xy-walk P (length <= prefix_bound).
CheckReport check_conjugation_invariance(const WalkSetOracle& oracle, std::size_t walk_bound,
                                         std::size_t prefix_bound, const EnumerationLimits& limits = {});

/// Largest walk count per vertex pair accepted by the 3-walk sign matrix.
inline constexpr std::size_t max_three_walk_pair_walks = 16384;

}  // namespace swalk
