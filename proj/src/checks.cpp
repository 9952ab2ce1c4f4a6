#include "swalk/checks.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>

namespace swalk {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

char sign_char(Membership m) {
  switch (m) {
    case Membership::in:
      return '-';
    case Membership::out:
      return '+';
    case Membership::unknown:
      break;
  }
  return '?';
}

std::string in_out(Membership m) {
  switch (m) {
    case Membership::in:
      return "in set";
    case Membership::out:
      return "not in set";
    case Membership::unknown:
      break;
  }
  return "unknown";
}

// Lowers `best` to `candidate` if smaller.
void atomic_min(std::atomic<std::size_t>& best, std::size_t candidate) {
  auto cur = best.load(std::memory_order_relaxed);
  while (candidate < cur && !best.compare_exchange_weak(cur, candidate, std::memory_order_relaxed)) {
  }
}

Verdict settle(bool failed, bool unknown) {
  if (failed) return Verdict::fail;
  return unknown ? Verdict::inconclusive : Verdict::pass;
}

// Row-major bit matrix with n x n entries.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t words() const noexcept { return words_; }
  const std::uint64_t* row(std::size_t i) const noexcept { return bits_.data() + i * words_; }
  void set(std::size_t i, std::size_t j) noexcept { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  bool get(std::size_t i, std::size_t j) const noexcept { return (row(i)[j / 64] >> (j % 64)) & 1U; }
  bool any() const noexcept {
    return std::any_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w != 0; });
  }
  std::uint64_t tail_mask() const noexcept {
    return n_ % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (n_ % 64)) - 1;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

struct TripleHit {
  std::size_t j = 0;
  std::size_t k = 0;
};

}  // namespace

CheckReport check_rotation_closed(const WalkSetOracle& oracle, std::size_t max_len, const EnumerationLimits& limits) {
  CheckReport report;
  report.property = "rotation closure";
  report.bound = "max-len " + std::to_string(max_len);

  const auto walks = shortest_first(enumerate_closed_walks(oracle.graph(), max_len, limits));
  const auto n = walks.size();
  std::vector<std::size_t> fail_k(n, 0);
  std::atomic<std::size_t> best{n};
  bool unknown = false;

#pragma omp parallel for schedule(dynamic, 64) reduction(|| : unknown)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    if (i > best.load(std::memory_order_relaxed)) continue;
    const auto& w = walks[i];
    const auto base = oracle.membership(w);
    for (std::size_t k = 1; k < w.length(); ++k) {
      const auto m = oracle.membership(rotate(w, k));
      if (base == Membership::unknown || m == Membership::unknown) {
        unknown = true;
      } else if (m != base) {
        fail_k[i] = k;
        atomic_min(best, i);
        break;
      }
    }
  }

  const auto hit = best.load();
  for (std::size_t i = 0; i < std::min(hit, n); ++i)
    report.checked += walks[i].length() > 1 ? walks[i].length() - 1 : 0;
  if (hit < n) {
    const auto& w = walks[hit];
    const auto k = fail_k[hit];
    auto r = rotate(w, k);
    report.checked += k;
    report.witness = Witness{{{"W", w}, {"R", r}},
                             "W " + in_out(oracle.membership(w)) + " but R = rotate(W, " + std::to_string(k) + ") " +
                                 in_out(oracle.membership(r))};
  }
  report.verdict = settle(hit < n, unknown);
  return report;
}

CheckReport check_exclusive_3walk(const WalkSetOracle& oracle, std::size_t factor_len,
                                  const EnumerationLimits& limits) {
  CheckReport report;
  report.property = "exclusive 3-walk";
  report.bound = "factor-len " + std::to_string(factor_len);

  const auto& g = oracle.graph();
  bool unknown = false;

  for (std::size_t x = 0; x < g.vertex_count(); ++x) {
    for (std::size_t y = 0; y < g.vertex_count(); ++y) {
      const auto walks = shortest_first(enumerate_walks(g, vertex_at(x), vertex_at(y), factor_len, limits));
      const auto n = walks.size();
      if (n > max_three_walk_pair_walks)
        throw CapError("3-walk check: " + std::to_string(n) + " walks between " + g.vertex_id(vertex_at(x)) +
                       " and " + g.vertex_id(vertex_at(y)) + " exceed the matrix cap of " +
                       std::to_string(max_three_walk_pair_walks));

      // sign(i, j) = sigma(W_i W_j^-1)
      BitMatrix minus(n), unknown_bits(n);
#pragma omp parallel
      {
        WalkBuilder product(g, vertex_at(x));
#pragma omp for schedule(dynamic, 8)
        for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
          const auto i = static_cast<std::size_t>(ii);
          for (std::size_t j = 0; j < n; ++j) {
            product.reset(vertex_at(x));
            product.append(walks[i]);
            product.append_inverse(walks[j]);
            switch (oracle.membership(product.build())) {
              case Membership::in:
                minus.set(i, j);
                break;
              case Membership::unknown:
                unknown_bits.set(i, j);
                break;
              case Membership::out:
                break;
            }
          }
        }
      }
      if (n > 0 && unknown_bits.any()) unknown = true;

      // Triple (i, j, k) fails iff sign(i,j) * sign(i,k) * sign(j,k) = minus,
      // i.e. bit k of row_i ^ row_j differs from sign(i,j).
      std::vector<TripleHit> hits(n);
      std::atomic<std::size_t> best{n};
      const auto words = minus.words();
      const auto tail = minus.tail_mask();
#pragma omp parallel for schedule(dynamic, 4)
      for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        if (i > best.load(std::memory_order_relaxed)) continue;
        const auto* mi = minus.row(i);
        const auto* ui = unknown_bits.row(i);
        bool found = false;
        for (std::size_t j = 0; j < n && !found; ++j) {
          const std::uint64_t flip = minus.get(i, j) ? ~std::uint64_t{0} : 0;
          const std::uint64_t blind = unknown_bits.get(i, j) ? ~std::uint64_t{0} : 0;
          const auto* mj = minus.row(j);
          const auto* uj = unknown_bits.row(j);
          for (std::size_t w = 0; w < words; ++w) {
            auto bad = (mi[w] ^ mj[w] ^ flip) & ~(ui[w] | uj[w] | blind);
            if (w + 1 == words) bad &= tail;
            if (bad) {
              hits[i] = {j, w * 64 + static_cast<std::size_t>(std::countr_zero(bad))};
              atomic_min(best, i);
              found = true;
              break;
            }
          }
        }
      }

      const auto hit = best.load();
      if (hit < n) {
        const auto [j, k] = hits[hit];
        report.checked += static_cast<std::uint64_t>(hit) * n * n + static_cast<std::uint64_t>(j) * n + k + 1;
        const auto& w1 = walks[hit];
        const auto& w2 = walks[j];
        const auto& w3 = walks[k];
        auto p12 = concat(w1, inverse(w2));
        auto p13 = concat(w1, inverse(w3));
        auto p23 = concat(w2, inverse(w3));
        const char s12 = sign_char(oracle.membership(p12));
        const char s13 = sign_char(oracle.membership(p13));
        const char s23 = sign_char(oracle.membership(p23));
        report.witness = Witness{{{"W1", w1},
                                  {"W2", w2},
                                  {"W3", w3},
                                  {"W1W2^-1", std::move(p12)},
                                  {"W1W3^-1", std::move(p13)},
                                  {"W2W3^-1", std::move(p23)}},
                                 std::string("s(W1W2^-1)*s(W1W3^-1)*s(W2W3^-1) = (") + s12 + ")*(" + s13 + ")*(" +
                                     s23 + ") = -"};
        report.verdict = Verdict::fail;
        return report;
      }
      report.checked += static_cast<std::uint64_t>(n) * n * n;
    }
  }
  report.verdict = settle(false, unknown);
  return report;
}

namespace {

struct ItemState {
  CheckReport report;
  bool unknown = false;

  explicit ItemState(std::string name, std::string bound) {
    report.property = std::move(name);
    report.bound = std::move(bound);
  }
  bool done() const noexcept { return report.failed(); }
  void fail(Witness w) {
    report.witness = std::move(w);
    report.verdict = Verdict::fail;
  }
  CheckReport finish() {
    if (!report.failed()) report.verdict = settle(false, unknown);
    return std::move(report);
  }
};

}  // namespace

CheckReport check_three_walk_consequences(const WalkSetOracle& oracle, std::size_t max_len,
                                          const EnumerationLimits& limits) {
  const auto& g = oracle.graph();
  const auto half = max_len / 2;
  const auto bound = "max-len " + std::to_string(max_len) + " (factors <= " + std::to_string(half) + ")";

  // (i) trivial walks
  ItemState trivial("(i) no trivial walk in set", bound);
  for (std::size_t v = 0; v < g.vertex_count() && !trivial.done(); ++v) {
    Walk e(g, vertex_at(v));
    const auto m = oracle.membership(e);
    ++trivial.report.checked;
    if (m == Membership::unknown) trivial.unknown = true;
    if (m == Membership::in) trivial.fail({{{"e_v", e}}, "trivial walk e_v is in set"});
  }

  // (ii) W W^-1
  ItemState backtrack("(ii) WW^-1 not in set", bound);
  for (std::size_t x = 0; x < g.vertex_count() && !backtrack.done(); ++x)
    for (std::size_t y = 0; y < g.vertex_count() && !backtrack.done(); ++y)
      for (const auto& w : shortest_first(enumerate_walks(g, vertex_at(x), vertex_at(y), half, limits))) {
        auto ww = concat(w, inverse(w));
        const auto m = oracle.membership(ww);
        ++backtrack.report.checked;
        if (m == Membership::unknown) backtrack.unknown = true;
        if (m == Membership::in) {
          backtrack.fail({{{"W", w}, {"WW^-1", std::move(ww)}}, "WW^-1 is in set"});
          break;
        }
      }

  const auto closed = shortest_first(enumerate_closed_walks(g, half, limits));

  // (iii) inverse invariance
  ItemState inv("(iii) s(W) = s(W^-1)", bound);
  for (const auto& w : closed) {
    auto wi = inverse(w);
    const auto a = oracle.membership(w);
    const auto b = oracle.membership(wi);
    ++inv.report.checked;
    if (a == Membership::unknown || b == Membership::unknown) {
      inv.unknown = true;
    } else if (a != b) {
      inv.fail({{{"W", w}, {"W^-1", std::move(wi)}},
                std::string("s(W) = ") + sign_char(a) + " but s(W^-1) = " + sign_char(b)});
      break;
    }
  }

  // (iv) multiplicativity at a common start vertex
  ItemState mult("(iv) s(WW') = s(W)*s(W')", bound);
  for (std::size_t a = 0; a < closed.size() && !mult.done(); ++a) {
    const auto& w = closed[a];
    for (std::size_t b = 0; b < closed.size(); ++b) {
      const auto& w2 = closed[b];
      if (w2.start() != w.start()) continue;
      auto prod = concat(w, w2);
      const auto mw = oracle.membership(w);
      const auto mw2 = oracle.membership(w2);
      const auto mp = oracle.membership(prod);
      ++mult.report.checked;
      if (mw == Membership::unknown || mw2 == Membership::unknown || mp == Membership::unknown) {
        mult.unknown = true;
        continue;
      }
      const bool lhs_minus = mp == Membership::in;
      const bool rhs_minus = (mw == Membership::in) != (mw2 == Membership::in);
      if (lhs_minus != rhs_minus) {
        mult.fail({{{"W", w}, {"W'", w2}, {"WW'", std::move(prod)}},
                   std::string("s(WW') = ") + sign_char(mp) + " but s(W)*s(W') = (" + sign_char(mw) + ")*(" +
                       sign_char(mw2) + ")"});
        break;
      }
    }
  }

  CheckReport report;
  report.property = "3-walk consequences (i)-(iv)";
  report.bound = bound;
  report.parts = {trivial.finish(), backtrack.finish(), inv.finish(), mult.finish()};
  bool unknown = false;
  for (const auto& part : report.parts) {
    report.checked += part.checked;
    unknown = unknown || part.verdict == Verdict::inconclusive;
    if (part.failed() && !report.witness) {
      report.witness = part.witness;
      report.witness->identity = part.property + ": " + report.witness->identity;
    }
  }
  report.verdict = settle(report.witness.has_value(), unknown);
  return report;
}

CheckReport check_conjugation_invariance(const WalkSetOracle& oracle, std::size_t walk_bound,
                                         std::size_t prefix_bound, const EnumerationLimits& limits) {
  CheckReport report;
  report.property = "conjugation invariance s(PWP^-1) = s(W)";
  report.bound = "walk-bound " + std::to_string(walk_bound) + ", prefix-bound " + std::to_string(prefix_bound);

  const auto& g = oracle.graph();
  const auto closed = shortest_first(enumerate_closed_walks(g, walk_bound, limits));
  const auto n = g.vertex_count();
  std::vector<std::vector<Walk>> prefixes(n * n);  // [x * n + y]
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      prefixes[x * n + y] = shortest_first(enumerate_walks(g, vertex_at(x), vertex_at(y), prefix_bound, limits));
  bool unknown = false;

  for (const auto& w : closed) {
    const auto y = w.start();
    const auto mw = oracle.membership(w);
    for (std::size_t x = 0; x < n; ++x) {
      for (const auto& p : prefixes[x * n + index_of(y)]) {
        auto conj = concat(concat(p, w), inverse(p));
        const auto mc = oracle.membership(conj);
        ++report.checked;
        if (mw == Membership::unknown || mc == Membership::unknown) {
          unknown = true;
        } else if (mw != mc) {
          report.witness = Witness{{{"P", p}, {"W", w}, {"PWP^-1", std::move(conj)}},
                                   std::string("s(PWP^-1) = ") + sign_char(mc) + " but s(W) = " + sign_char(mw)};
          report.verdict = Verdict::fail;
          return report;
        }
      }
    }
  }
  report.verdict = settle(false, unknown);
  return report;
}

}  // namespace swalk
