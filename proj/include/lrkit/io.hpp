#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrkit/enumeration.hpp"
#include "lrkit/lr_map.hpp"
#include "lrkit/tableau.hpp"

namespace lrkit {

enum class DocumentKind { ssyt, symplectic, lrs, rec, lr };

std::string to_string(DocumentKind k);
/// Throws InputError on an unknown tag.
DocumentKind parse_kind(const std::string& tag);

/// JSON exchange form of a tableau. Field order on output is fixed:
/// outer, inner, rows, n, kind (the last two only when set).
struct TableauDocument {
  std::vector<int> outer;
  std::vector<int> inner;
  /// Filled boxes only, left to right.
  std::vector<std::vector<int>> rows;
  std::optional<int> n;
  std::optional<DocumentKind> kind;

  friend bool operator==(const TableauDocument&, const TableauDocument&) = default;
};

using Json = nlohmann::ordered_json;

TableauDocument to_document(const SkewTableau& t, std::optional<int> n = std::nullopt,
                            std::optional<DocumentKind> kind = std::nullopt);
/// Throws InputError when the document does not describe a skew filling.
SkewTableau to_tableau(const TableauDocument& doc);

Json to_json(const TableauDocument& doc);
/// Throws InputError on missing or mistyped fields.
TableauDocument document_from_json(const Json& j);
/// Throws InputError on malformed JSON text.
Json parse_json(const std::string& text);

/// Partition from "3,1" or "(3,1)"; empty text gives the empty partition.
Partition parse_partition(const std::string& text);

Json to_json(const Partition& p);
Json to_json(const LrAiiTrace& trace, int n);
Json to_json(const Certificate& c, int n);
Json to_json(const VerificationReport& r);

}  // namespace lrkit
