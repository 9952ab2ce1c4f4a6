#include "swalk/walkset.hpp"

#include <algorithm>

namespace swalk {

std::string_view to_string(OracleFlavor f) noexcept {
  switch (f) {
    case OracleFlavor::signature:
      return "signature";
    case OracleFlavor::explicit_set:
      return "explicit";
    case OracleFlavor::section2:
      return "section2";
  }
  return "?";
}

std::optional<OracleFlavor> parse_flavor(std::string_view text) noexcept {
  if (text == "signature") return OracleFlavor::signature;
  if (text == "explicit") return OracleFlavor::explicit_set;
  if (text == "section2") return OracleFlavor::section2;
  return std::nullopt;
}

WalkSetOracle WalkSetOracle::signature_induced(Signature sig) {
  auto g = sig.graph_ptr();
  return WalkSetOracle(std::move(g), SignatureFlavor{std::move(sig)});
}

WalkSetOracle WalkSetOracle::explicit_set(GraphPtr graph, std::vector<Walk> members, std::size_t bound) {
  if (!graph) throw GraphError("explicit walk set without a graph");
  for (const auto& w : members) {
    if (&w.graph() != graph.get()) throw GraphError("explicit member " + to_string(w) + " is on another graph");
    if (!w.closed()) throw GraphError("explicit member " + to_string(w) + " is not closed");
    if (w.length() > bound)
      throw GraphError("explicit member " + to_string(w) + " is longer than the bound " + std::to_string(bound));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return WalkSetOracle(std::move(graph), ExplicitFlavor{std::move(members), bound});
}

WalkSetOracle WalkSetOracle::section2_unchecked(Signature sig, VertexIndex v0) {
  if (!sig.graph().contains(v0)) throw GraphError("v0 is not a vertex of the graph");
  auto g = sig.graph_ptr();
  return WalkSetOracle(std::move(g), Section2Flavor{std::move(sig), v0});
}

OracleFlavor WalkSetOracle::flavor() const noexcept {
  return static_cast<OracleFlavor>(data_.index());
}

const Signature* WalkSetOracle::signature() const noexcept {
  if (auto* s = std::get_if<SignatureFlavor>(&data_)) return &s->sig;
  if (auto* s = std::get_if<Section2Flavor>(&data_)) return &s->sig;
  return nullptr;
}

std::optional<VertexIndex> WalkSetOracle::v0() const noexcept {
  if (auto* s = std::get_if<Section2Flavor>(&data_)) return s->v0;
  return std::nullopt;
}

std::optional<std::size_t> WalkSetOracle::bound() const noexcept {
  if (auto* s = std::get_if<ExplicitFlavor>(&data_)) return s->bound;
  return std::nullopt;
}

std::span<const Walk> WalkSetOracle::members() const noexcept {
  if (auto* s = std::get_if<ExplicitFlavor>(&data_)) return s->sorted;
  return {};
}

Membership WalkSetOracle::membership(const Walk& walk) const {
  auto as_membership = [](bool in) { return in ? Membership::in : Membership::out; };
  switch (data_.index()) {
    case 0: {
      const auto& f = std::get<SignatureFlavor>(data_);
      return as_membership(sign_of_walk(f.sig, walk) == Sign::minus);
    }
    case 1: {
      const auto& f = std::get<ExplicitFlavor>(data_);
      if (walk.length() > f.bound) return Membership::unknown;
      return as_membership(std::binary_search(f.sorted.begin(), f.sorted.end(), walk));
    }
    default: {
      const auto& f = std::get<Section2Flavor>(data_);
      return as_membership(walk.start() != f.v0 && sign_of_walk(f.sig, walk) == Sign::minus);
    }
  }
}

std::string WalkSetOracle::describe() const {
  switch (flavor()) {
    case OracleFlavor::signature:
      return "signature-induced [" + to_string(*signature()) + "]";
    case OracleFlavor::explicit_set:
      return "explicit set of " + std::to_string(members().size()) + " walks, bound " + std::to_string(*bound());
    case OracleFlavor::section2:
      return "section2 [" + to_string(*signature()) + "] minus walks starting at " + graph().vertex_id(*v0());
  }
  return {};
}

std::optional<Sign> sigma_of(const WalkSetOracle& oracle, const Walk& walk) {
  if (&walk.graph() != &oracle.graph()) throw GraphError("walk is not on the oracle's graph");
  if (!walk.closed()) throw WalkError("sigma of an open walk " + to_string(walk), 0);
  switch (oracle.membership(walk)) {
    case Membership::in:
      return Sign::minus;
    case Membership::out:
      return Sign::plus;
    case Membership::unknown:
      break;
  }
  return std::nullopt;
}

std::vector<Walk> list_members(const WalkSetOracle& oracle, std::size_t max_len, const EnumerationLimits& limits) {
  std::vector<Walk> out;
  for (auto& w : enumerate_closed_walks(oracle.graph(), max_len, limits)) {
    switch (oracle.membership(w)) {
      case Membership::in:
        out.push_back(std::move(w));
        break;
      case Membership::out:
        break;
      case Membership::unknown:
        throw UnknownMembershipError("membership of " + to_string(w) + " is unknown beyond the set's bound");
    }
  }
  return out;
}

}  // namespace swalk
