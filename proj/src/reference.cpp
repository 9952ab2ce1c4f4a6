#include "swalk/reference.hpp"

namespace swalk::reference {

CheckReport check_rotation_closed(const WalkSetOracle& oracle, std::size_t max_len, const EnumerationLimits& limits) {
  CheckReport report;
  report.property = "rotation closure";
  report.bound = "max-len " + std::to_string(max_len);
  bool unknown = false;
  for (const auto& w : shortest_first(enumerate_closed_walks(oracle.graph(), max_len, limits))) {
    const auto base = oracle.membership(w);
    for (std::size_t k = 1; k < w.length(); ++k) {
      auto r = rotate(w, k);
      const auto m = oracle.membership(r);
      ++report.checked;
      if (base == Membership::unknown || m == Membership::unknown) {
        unknown = true;
      } else if (m != base) {
        report.verdict = Verdict::fail;
        report.witness = Witness{{{"W", w}, {"R", std::move(r)}}, "rotation changes membership"};
        return report;
      }
    }
  }
  report.verdict = unknown ? Verdict::inconclusive : Verdict::pass;
  return report;
}

CheckReport check_exclusive_3walk(const WalkSetOracle& oracle, std::size_t factor_len,
                                  const EnumerationLimits& limits) {
  CheckReport report;
  report.property = "exclusive 3-walk";
  report.bound = "factor-len " + std::to_string(factor_len);
  const auto& g = oracle.graph();
  bool unknown = false;

  for (std::size_t x = 0; x < g.vertex_count(); ++x)
    for (std::size_t y = 0; y < g.vertex_count(); ++y) {
      const auto walks = shortest_first(enumerate_walks(g, vertex_at(x), vertex_at(y), factor_len, limits));
      for (const auto& w1 : walks)
        for (const auto& w2 : walks)
          for (const auto& w3 : walks) {
            ++report.checked;
            const auto s12 = sigma_of(oracle, concat(w1, inverse(w2)));
            const auto s13 = sigma_of(oracle, concat(w1, inverse(w3)));
            const auto s23 = sigma_of(oracle, concat(w2, inverse(w3)));
            if (!s12 || !s13 || !s23) {
              unknown = true;
              continue;
            }
            if (*s12 * *s13 * *s23 == Sign::minus) {
              report.verdict = Verdict::fail;
              report.witness = Witness{{{"W1", w1}, {"W2", w2}, {"W3", w3}}, "odd number of products in set"};
              return report;
            }
          }
    }
  report.verdict = unknown ? Verdict::inconclusive : Verdict::pass;
  return report;
}

std::optional<Walk> first_disagreement(const Signature& sig, const WalkSetOracle& oracle, std::size_t max_len,
                                       const EnumerationLimits& limits) {
  for (auto& w : shortest_first(enumerate_closed_walks(oracle.graph(), max_len, limits))) {
    const auto m = oracle.membership(w);
    if (m == Membership::unknown)
      throw UnknownMembershipError("membership of " + to_string(w) + " is unknown beyond the set's bound");
    if ((m == Membership::in) != (sign_of_walk(sig, w) == Sign::minus)) return std::move(w);
  }
  return std::nullopt;
}

std::vector<std::optional<Walk>> refute_all(const WalkSetOracle& oracle, std::size_t max_len,
                                            const EnumerationLimits& limits) {
  std::vector<std::optional<Walk>> out;
  for (const auto& sig : enumerate_signatures(oracle.graph_ptr()))
    out.push_back(first_disagreement(sig, oracle, max_len, limits));
  return out;
}

std::optional<std::vector<VertexIndex>> switching_equivalent(const Signature& a, const Signature& b) {
  if (a.graph_ptr() != b.graph_ptr()) throw GraphError("signatures live on different graphs");
  const auto n = a.graph().vertex_count();
  if (n > 20) throw CapError("exhaustive switching search is limited to 20 vertices");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexIndex> set;
    for (std::size_t v = 0; v < n; ++v)
      if ((mask >> v) & 1U) set.push_back(vertex_at(v));
    if (apply_switching(a, set) == b) return set;
  }
  return std::nullopt;
}

}  // namespace swalk::reference
