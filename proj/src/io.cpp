#include "lrkit/io.hpp"

#include <charconv>

#include "lrkit/error.hpp"

namespace lrkit {

std::string to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::ssyt: return "ssyt";
    case DocumentKind::symplectic: return "symplectic";
    case DocumentKind::lrs: return "lrs";
    case DocumentKind::rec: return "rec";
    case DocumentKind::lr: return "lr";
  }
  return "?";
}

DocumentKind parse_kind(const std::string& tag) {
  for (DocumentKind k : {DocumentKind::ssyt, DocumentKind::symplectic, DocumentKind::lrs, DocumentKind::rec,
                         DocumentKind::lr})
    if (to_string(k) == tag) return k;
  throw InputError("unknown document kind '" + tag + "'");
}

TableauDocument to_document(const SkewTableau& t, std::optional<int> n, std::optional<DocumentKind> kind) {
  TableauDocument doc;
  doc.outer = t.outer().parts();
  doc.inner = t.inner().parts();
  for (int i = 1; i <= t.outer().length(); ++i) doc.rows.push_back(t.row_entries(i));
  doc.n = n;
  doc.kind = kind;
  return doc;
}

SkewTableau to_tableau(const TableauDocument& doc) {
  const Partition outer(doc.outer);
  const Partition inner(doc.inner);
  if (static_cast<int>(doc.rows.size()) > outer.length()) {
    for (std::size_t i = static_cast<std::size_t>(outer.length()); i < doc.rows.size(); ++i)
      if (!doc.rows[i].empty()) throw InputError("row " + std::to_string(i + 1) + " lies outside the outer shape");
  }
  std::vector<std::vector<int>> rows = doc.rows;
  rows.resize(static_cast<std::size_t>(outer.length()));
  return SkewTableau(SkewShape(outer, inner), rows);
}

Json to_json(const TableauDocument& doc) {
  Json j;
  j["outer"] = doc.outer;
  j["inner"] = doc.inner;
  j["rows"] = doc.rows;
  if (doc.n) j["n"] = *doc.n;
  if (doc.kind) j["kind"] = to_string(*doc.kind);
  return j;
}

TableauDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("tableau document must be a JSON object");
  TableauDocument doc;
  try {
    doc.outer = j.at("outer").get<std::vector<int>>();
    doc.inner = j.contains("inner") ? j.at("inner").get<std::vector<int>>() : std::vector<int>{};
    doc.rows = j.at("rows").get<std::vector<std::vector<int>>>();
    if (j.contains("n") && !j.at("n").is_null()) doc.n = j.at("n").get<int>();
    if (j.contains("kind") && !j.at("kind").is_null()) doc.kind = parse_kind(j.at("kind").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad tableau document: ") + e.what());
  }
  return doc;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(' || c == ')' || c == ',' || c == ' ') {
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{}) throw InputError("malformed partition '" + text + "'");
    parts.push_back(v);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Partition(parts);
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const LrAiiTrace& trace, int n) {
  Json j;
  j["p"] = to_json(to_document(trace.p_tableau, n, DocumentKind::symplectic));
  j["q"] = to_json(to_document(trace.q_tableau, n, DocumentKind::rec));
  Json chain = Json::array();
  for (const auto& p : trace.shape_chain) chain.push_back(to_json(p));
  j["chain"] = chain;
  j["steps"] = trace.steps;
  return j;
}

Json to_json(const Certificate& c, int n) {
  Json j;
  j["check"] = c.check;
  j["message"] = c.message;
  Json w = Json::array();
  for (const auto& t : c.witnesses) w.push_back(to_json(to_document(t, n)));
  j["witnesses"] = w;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["n"] = r.n;
  j["lambda"] = to_json(r.lambda);
  j["lhs"] = r.lhs_count;
  j["rhs"] = r.rhs_total();
  Json mus = Json::array();
  for (const auto& m : r.rhs_breakdown) {
    Json e;
    e["mu"] = to_json(m.mu);
    e["spt"] = m.spt;
    e["lrs"] = m.lrs;
    e["rec"] = m.rec;
    mus.push_back(e);
  }
  j["breakdown"] = mus;
  j["ok"] = r.ok();
  j["failures"] = r.roundtrip_failures.size();
  j["elapsed_seconds"] = r.elapsed.count();
  return j;
}

}  // namespace lrkit
