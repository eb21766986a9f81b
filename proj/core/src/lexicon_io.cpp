#include <fstream>
#include <sstream>

#include <json.hpp>

#include "holosem/errors.hpp"
#include "holosem/lexicon.hpp"

// Lexicon (de)serialization. nlohmann::json emits doubles in the shortest
// form that parses back to the identical bit pattern, so numeric payloads
// round-trip exactly.

namespace holosem {

namespace {

using nlohmann::json;

json backend_to_json(const BindingBackend& backend) {
  json j;
  j["kind"] = backend.is_tensor() ? "tensor" : "hrr";
  if (backend.is_hrr()) j["dim"] = backend.hrr_dim;
  return j;
}

BindingBackend backend_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "tensor") return BindingBackend::tensor();
  if (kind == "hrr") return BindingBackend::hrr(j.at("dim").get<std::size_t>());
  throw InvalidInputError("lexicon_from_json: unknown backend kind '" + kind + "'");
}

json entry_to_json(const LexicalEntry& entry) {
  json j;
  j["word"] = entry.word;
  j["category"] = std::string(to_string(entry.category));
  std::visit(
      [&](const auto& payload) {
        using T = std::decay_t<decltype(payload)>;
        if constexpr (std::is_same_v<T, HyperVector>) {
          j["shape"] = json::array({payload.dim()});
          j["values"] = payload.coords;
        } else if constexpr (std::is_same_v<T, DenseMatrix>) {
          j["shape"] = json::array({payload.rows, payload.cols});
          j["values"] = payload.entries;
        } else {
          j["shape"] = json::array({payload.d1, payload.d2, payload.d3});
          j["values"] = payload.entries;
        }
      },
      entry.payload);
  return j;
}

LexicalEntry entry_from_json(const json& j) {
  LexicalEntry entry;
  entry.word = j.at("word").get<std::string>();
  entry.category = category_from_string(j.at("category").get<std::string>());
  const auto shape = j.at("shape").get<std::vector<std::size_t>>();
  auto values = j.at("values").get<std::vector<double>>();
  std::size_t expected = 1;
  for (std::size_t extent : shape) expected *= extent;
  if (shape.empty() || expected != values.size()) {
    throw InvalidInputError("lexicon_from_json: shape does not match value count");
  }
  switch (shape.size()) {
    case 1:
      entry.payload = HyperVector(std::move(values));
      break;
    case 2:
      entry.payload = DenseMatrix(shape[0], shape[1], std::move(values));
      break;
    case 3: {
      Order3Tensor t(shape[0], shape[1], shape[2]);
      t.entries = std::move(values);
      entry.payload = std::move(t);
      break;
    }
    default:
      throw InvalidInputError("lexicon_from_json: unsupported payload rank");
  }
  return entry;
}

}  // namespace

std::string lexicon_to_json(const Lexicon& lexicon) {
  json doc;
  doc["format_version"] = "1";
  doc["backend"] = backend_to_json(lexicon.backend());
  doc["noun_dim"] = lexicon.noun_dim();
  doc["sentence_dim"] = lexicon.sentence_dim();
  json entries = json::array();
  for (const auto& [word, entry] : lexicon.entries()) {
    entries.push_back(entry_to_json(entry));
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2);
}

Lexicon lexicon_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("lexicon_from_json: parse error: ") + e.what());
  }
  try {
    if (doc.at("format_version").get<std::string>() != "1") {
      throw InvalidInputError("lexicon_from_json: unsupported format_version");
    }
    Lexicon lexicon(backend_from_json(doc.at("backend")),
                    doc.at("noun_dim").get<std::size_t>(),
                    doc.at("sentence_dim").get<std::size_t>());
    for (const json& entry : doc.at("entries")) {
      lexicon.insert(entry_from_json(entry));
    }
    return lexicon;
  } catch (const json::exception& e) {
    throw InvalidInputError(std::string("lexicon_from_json: malformed document: ") +
                            e.what());
  }
}

void save_lexicon(const Lexicon& lexicon, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("save_lexicon: cannot open '" + path.string() + "'");
  out << lexicon_to_json(lexicon) << '\n';
  if (!out) throw IoError("save_lexicon: write failed for '" + path.string() + "'");
}

Lexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("load_lexicon: cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return lexicon_from_json(buffer.str());
}

}  // namespace holosem
