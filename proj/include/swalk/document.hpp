#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "swalk/walkset.hpp"

namespace swalk {

/// Declared walk set: flavor plus the parameters that flavor uses.
struct WalkSetDecl {
  OracleFlavor flavor = OracleFlavor::signature;
  std::optional<VertexIndex> v0;
  std::vector<Walk> members;
  std::optional<std::size_t> bound;
};

/// One scenario file:
///
///   {"version": 1,
///    "graph": {"vertices": [...], "edges": [{"id": ..., "ends": [u, v]}]},
///    "signature": {edge-id: "+" | "-"},
///    "walks": [{"start": v, "edges": [...]}],
///    "walkset": {"flavor": "signature" | "explicit" | "section2",
///                "v0": ..., "members": [walks], "bound": L}}
///
/// Only "version" and "graph" are required.
struct Document {
  int version = 1;
  GraphPtr graph;
  std::optional<Signature> signature;
  std::vector<Walk> walks;
  std::optional<WalkSetDecl> walkset;
};

/// Parse or validation failure. where() is "line L, column C" for syntax
/// errors and a JSON pointer such as "/graph/edges/1/ends/0" otherwise.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::string where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

Document parse_document(std::string_view text);
Document load_document(const std::string& path);

nlohmann::json to_json(const Document& doc);
/// Canonical form: sorted keys, two-space indent, trailing newline.
std::string serialize_document(const Document& doc);

nlohmann::json walk_to_json(const Walk& walk);

/// Oracle from the document's walk set, with flavor and v0 optionally
/// overridden. A section2 walk set without v0 uses the least vertex.
WalkSetOracle make_oracle(const Document& doc, std::optional<OracleFlavor> flavor = std::nullopt,
                          std::optional<std::string> v0 = std::nullopt);

}  // namespace swalk
