#pragma once

#include <string>

#include <json.hpp>

#include "swalk/checks.hpp"
#include "swalk/realize.hpp"
#include "swalk/suites.hpp"

namespace swalk {

/// "rotation closure: pass at max-len 6 (checked 120)" followed by indented
/// witness lines, one per named walk, and the identity.
std::string render_text(const CheckReport& report, int indent = 0);
std::string render_text(const Refutation& refutation);
std::string render_text(const RealizabilityResult& result);
std::string render_text(const SuiteResult& result);

nlohmann::json render_json(const CheckReport& report);
nlohmann::json render_json(const Refutation& refutation);
nlohmann::json render_json(const RealizabilityResult& result);
nlohmann::json render_json(const SuiteResult& result);
nlohmann::json signature_json(const Signature& sig);

}  // namespace swalk
