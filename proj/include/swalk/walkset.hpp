#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swalk/graph.hpp"
#include "swalk/walk.hpp"

namespace swalk {

enum class Membership : std::uint8_t { out, in, unknown };

enum class OracleFlavor : std::uint8_t { signature, explicit_set, section2 };

std::string_view to_string(OracleFlavor f) noexcept;
std::optional<OracleFlavor> parse_flavor(std::string_view text) noexcept;

/// Membership predicate over the closed walks of one graph.
///
///  - signature: the negative closed walks of a signature.
///  - explicit_set: a finite list of closed walks, authoritative up to a length
///    bound; longer walks answer unknown.
///  - section2: negative closed walks that do not start at a chosen vertex v0.
///    Satisfies the exclusive 3-walk property but is not rotation closed.
class WalkSetOracle {
 public:
  static WalkSetOracle signature_induced(Signature sig);
  /// Members must be closed and no longer than `bound`; duplicates collapse.
  static WalkSetOracle explicit_set(GraphPtr graph, std::vector<Walk> members, std::size_t bound);
  /// No precondition check; see build_section2_oracle for the checked form.
  static WalkSetOracle section2_unchecked(Signature sig, VertexIndex v0);

  OracleFlavor flavor() const noexcept;
  const Multigraph& graph() const noexcept { return *graph_; }
  const GraphPtr& graph_ptr() const noexcept { return graph_; }

  /// The signature behind signature/section2 flavors.
  const Signature* signature() const noexcept;
  std::optional<VertexIndex> v0() const noexcept;
  /// Representation bound of an explicit set.
  std::optional<std::size_t> bound() const noexcept;
  /// Sorted members of an explicit set; empty for the other flavors.
  std::span<const Walk> members() const noexcept;

  /// Caller guarantees `walk` is closed and on this graph.
  Membership membership(const Walk& walk) const;

  /// Short description for report headers.
  std::string describe() const;

 private:
  struct SignatureFlavor {
    Signature sig;
  };
  struct ExplicitFlavor {
    std::vector<Walk> sorted;
    std::size_t bound;
  };
  struct Section2Flavor {
    Signature sig;
    VertexIndex v0;
  };

  WalkSetOracle(GraphPtr graph, std::variant<SignatureFlavor, ExplicitFlavor, Section2Flavor> data)
      : graph_(std::move(graph)), data_(std::move(data)) {}

  GraphPtr graph_;
  std::variant<SignatureFlavor, ExplicitFlavor, Section2Flavor> data_;
};

/// Indicator sign of the set: plus outside, minus inside, nullopt when unknown.
/// Throws WalkError for an open walk and GraphError for a foreign walk.
std::optional<Sign> sigma_of(const WalkSetOracle& oracle, const Walk& walk);

/// Raised when an operation needs a definite answer and the oracle has none.
class UnknownMembershipError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed walks of length <= max_len that are members, in enumeration order.
/// Throws UnknownMembershipError naming the first unknown walk.
std::vector<Walk> list_members(const WalkSetOracle& oracle, std::size_t max_len,
                               const EnumerationLimits& limits = {});

}  // namespace swalk
