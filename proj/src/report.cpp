#include "swalk/report.hpp"

#include "swalk/document.hpp"

namespace swalk {

using nlohmann::json;

namespace {

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent), ' '); }

std::string verdict_phrase(const CheckReport& r) {
  switch (r.verdict) {
    case Verdict::pass:
      return "pass at " + r.bound;
    case Verdict::fail:
      return "FAIL";
    case Verdict::inconclusive:
      return "inconclusive at " + r.bound + " (membership unknown for some walks)";
  }
  return {};
}

}  // namespace

std::string render_text(const CheckReport& report, int indent) {
  std::string out = pad(indent) + report.property + ": " + verdict_phrase(report) + " (checked " +
                    std::to_string(report.checked) + ")\n";
  if (report.witness) {
    for (const auto& nw : report.witness->walks) out += pad(indent + 4) + nw.name + " = " + to_string(nw.walk) + "\n";
    out += pad(indent + 4) + report.witness->identity + "\n";
  }
  for (const auto& part : report.parts) {
    out += pad(indent + 2) + part.property + ": " + verdict_phrase(part) + " (checked " +
           std::to_string(part.checked) + ")\n";
  }
  return out;
}

std::string render_text(const Refutation& refutation) {
  std::string out = "refutation at max-len " + std::to_string(refutation.bound) + ": " +
                    std::to_string(refutation.signatures.size() - refutation.unrefuted().size()) + " of " +
                    std::to_string(refutation.signatures.size()) + " signatures refuted\n";
  for (std::size_t i = 0; i < refutation.signatures.size(); ++i) {
    out += "  [" + to_string(refutation.signatures[i]) + "] ";
    if (refutation.witnesses[i])
      out += "refuted by " + to_string(*refutation.witnesses[i]) + " (length " +
             std::to_string(refutation.witnesses[i]->length()) + ")\n";
    else
      out += "unrefuted (candidate realization)\n";
  }
  return out;
}

std::string render_text(const RealizabilityResult& result) {
  std::string out;
  if (result.verdict == Realizability::realizable_at_bound) {
    out += "realizable at max-len " + std::to_string(result.bound) + "\n";
    out += "  signature: " + to_string(*result.signature) + "\n";
    return out;
  }
  out += "NOT realizable\n";
  if (result.signature) out += "  reconstructed candidate: " + to_string(*result.signature) + "\n";
  if (result.witness) out += "  candidate disagrees with the set on " + to_string(*result.witness) + "\n";
  if (result.refutation) out += render_text(*result.refutation);
  return out;
}

std::string render_text(const SuiteResult& result) {
  std::string out = result.name + ": " + (result.passed() ? "pass" : "FAIL") + " (" +
                    std::to_string(result.instances) + " instances, " + std::to_string(result.failures) +
                    " failures)\n";
  for (const auto& [label, value] : result.counters) out += "  " + label + ": " + std::to_string(value) + "\n";
  for (const auto& s : result.samples) out += "  failure: " + s + "\n";
  return out;
}

json signature_json(const Signature& sig) {
  json out = json::object();
  for (std::size_t e = 0; e < sig.signs().size(); ++e)
    out[sig.graph().edge_id(edge_at(e))] = std::string(1, to_char(sig.signs()[e]));
  return out;
}

json render_json(const CheckReport& report) {
  json out{{"property", report.property},
           {"verdict", std::string(to_string(report.verdict))},
           {"checked", report.checked},
           {"bound", report.bound}};
  if (report.witness) {
    json walks = json::array();
    for (const auto& nw : report.witness->walks)
      walks.push_back({{"name", nw.name}, {"walk", walk_to_json(nw.walk)}, {"text", to_string(nw.walk)}});
    out["witness"] = {{"walks", walks}, {"identity", report.witness->identity}};
  }
  if (!report.parts.empty()) {
    json parts = json::array();
    for (const auto& p : report.parts) parts.push_back(render_json(p));
    out["parts"] = parts;
  }
  return out;
}

json render_json(const Refutation& refutation) {
  json entries = json::array();
  for (std::size_t i = 0; i < refutation.signatures.size(); ++i) {
    json e{{"signature", signature_json(refutation.signatures[i])}};
    e["witness"] = refutation.witnesses[i] ? walk_to_json(*refutation.witnesses[i]) : json(nullptr);
    entries.push_back(e);
  }
  return {{"bound", refutation.bound}, {"all_refuted", refutation.all_refuted()}, {"signatures", entries}};
}

json render_json(const RealizabilityResult& result) {
  json out{{"verdict", result.verdict == Realizability::realizable_at_bound ? "realizable-at-bound" : "not-realizable"},
           {"bound", result.bound}};
  if (result.signature) out["signature"] = signature_json(*result.signature);
  if (result.witness) out["witness"] = walk_to_json(*result.witness);
  if (result.refutation) out["refutation"] = render_json(*result.refutation);
  return out;
}

json render_json(const SuiteResult& result) {
  json counters = json::object();
  for (const auto& [label, value] : result.counters) counters[label] = value;
  return {{"suite", result.name},
          {"passed", result.passed()},
          {"instances", result.instances},
          {"failures", result.failures},
          {"counters", counters},
          {"samples", result.samples}};
}

}  // namespace swalk
