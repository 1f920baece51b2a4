#include "linec4/document.hpp"

#include <sstream>

#include "json.hpp"
#include "linec4/errors.hpp"

namespace linec4 {

using nlohmann::json;

DecompositionDocument make_document(const Params& p, const Decomposition& d, std::string plan) {
  DecompositionDocument doc;
  doc.params = p;
  doc.plan = std::move(plan);
  doc.cycles.reserve(d.size());
  for (const auto& c : d.cycles) doc.cycles.push_back(c.vertices());
  doc.declared_cycle_count = d.size();
  return doc;
}

std::string write_document(const DecompositionDocument& doc) {
  std::ostringstream out;
  out << "{\n"
      << "  \"format_version\": " << json(kDocumentFormatVersion).dump() << ",\n"
      << "  \"graph\": " << json(kDocumentGraph).dump() << ",\n"
      << "  \"params\": {\"m\": " << doc.params.m << ", \"n\": " << doc.params.n
      << ", \"lambda\": " << doc.params.lambda << "},\n"
      << "  \"meta\": {\"cycle_count\": " << doc.cycles.size()
      << ", \"plan\": " << json(doc.plan).dump() << "},\n"
      << "  \"cycles\": [";
  for (std::size_t i = 0; i < doc.cycles.size(); ++i) {
    out << (i == 0 ? "\n    [" : ",\n    [");
    for (std::size_t k = 0; k < 4; ++k) {
      const VertexId v = doc.cycles[i][k];
      out << (k == 0 ? "" : ",") << '[' << v.row() << ',' << v.col() << ']';
    }
    out << ']';
  }
  out << (doc.cycles.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return out.str();
}

namespace {

std::uint64_t positive(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned() || j[key].get<std::uint64_t>() == 0) {
    throw DocumentError(std::string("params.") + key + " must be a positive integer");
  }
  return j[key].get<std::uint64_t>();
}

}  // namespace

DecompositionDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document must be a JSON object");
  if (j.value("format_version", json()) != json(kDocumentFormatVersion)) {
    throw DocumentError("unsupported format_version");
  }
  if (j.value("graph", json()) != json(kDocumentGraph)) {
    throw DocumentError("graph must be \"" + std::string(kDocumentGraph) + "\"");
  }
  if (!j.contains("params") || !j["params"].is_object()) throw DocumentError("missing params");

  DecompositionDocument doc;
  const json& params = j["params"];
  doc.params = {positive(params, "m"), positive(params, "n"), positive(params, "lambda")};
  if (j.contains("meta") && j["meta"].is_object()) {
    const json& meta = j["meta"];
    if (meta.contains("plan") && meta["plan"].is_string()) doc.plan = meta["plan"];
    if (meta.contains("cycle_count") && meta["cycle_count"].is_number_unsigned()) {
      doc.declared_cycle_count = meta["cycle_count"];
    }
  }

  if (!j.contains("cycles") || !j["cycles"].is_array()) throw DocumentError("missing cycles");
  const json& cycles = j["cycles"];
  doc.cycles.reserve(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const json& c = cycles[i];
    if (!c.is_array() || c.size() != 4) {
      throw DocumentError("cycle #" + std::to_string(i) + " must list 4 vertices");
    }
    std::array<VertexId, 4> verts;
    for (std::size_t k = 0; k < 4; ++k) {
      const json& v = c[k];
      if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() ||
          !v[1].is_number_unsigned()) {
        throw DocumentError("cycle #" + std::to_string(i) + ": vertex must be [row, col]");
      }
      verts[k] = VertexId::pair(v[0].get<std::uint32_t>(), v[1].get<std::uint32_t>());
    }
    doc.cycles.push_back(verts);
  }
  return doc;
}

}  // namespace linec4
