#include "fiveclass/manifold_json.hpp"

#include <json.hpp>

#include <string>
#include <vector>

#include "fiveclass/error.hpp"

namespace fiveclass {

using forms::Integer;
using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::InvalidForm, what);
}

Integer parse_integer(std::string_view text) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t += c;
  std::size_t i = (t.size() > 1 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) bad("expected an integer, got '" + std::string(text) + "'");
  for (std::size_t j = i; j < t.size(); ++j) {
    if (t[j] < '0' || t[j] > '9') {
      bad("expected an integer, got '" + std::string(text) + "'");
    }
  }
  if (t[0] == '+') t.erase(0, 1);
  return Integer(t);
}

Integer integer_of(const json& v) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Integer(v.get<std::uint64_t>())
                                  : Integer(v.get<std::int64_t>());
  }
  if (v.is_string()) return parse_integer(v.get<std::string>());
  bad("expected an integer, got " + v.dump());
}

std::vector<Integer> integer_row(const json& v, const char* what) {
  if (!v.is_array()) bad(std::string(what) + " must be an array");
  std::vector<Integer> out;
  for (const json& x : v) out.push_back(integer_of(x));
  return out;
}

}  // namespace

ManifoldFile parse_manifold_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("top level must be an object");
  if (!doc.contains("form") || !doc["form"].is_object()) {
    bad("missing \"form\" object");
  }
  const json& form = doc["form"];
  const bool has_blocks = form.contains("blocks");
  const bool has_matrix = form.contains("matrix");
  if (has_blocks == has_matrix) {
    bad("\"form\" needs exactly one of \"blocks\" or \"matrix\"");
  }

  std::optional<forms::IntersectionForm> q;
  if (has_blocks) {
    if (!form["blocks"].is_array() || form["blocks"].empty()) {
      bad("\"blocks\" must be a non-empty array");
    }
    std::vector<forms::NamedBlock> blocks;
    for (const json& b : form["blocks"]) {
      if (b.is_string()) {
        blocks.push_back(forms::parse_block(b.get<std::string>()));
      } else if (b.is_number_integer()) {
        blocks.push_back(forms::parse_block(std::to_string(b.get<long long>())));
      } else {
        bad("form block must be a string, got " + b.dump());
      }
    }
    q = forms::IntersectionForm::from_blocks(blocks);
  } else {
    if (!form["matrix"].is_array()) bad("\"matrix\" must be an array of rows");
    forms::Matrix m;
    for (const json& row : form["matrix"]) m.push_back(integer_row(row, "matrix row"));
    q = forms::IntersectionForm(std::move(m));
  }

  ManifoldFile out{*q, 0, std::nullopt};
  if (doc.contains("ks")) {
    const json& ks = doc["ks"];
    if (!ks.is_number_integer() || (ks.get<long long>() != 0 && ks.get<long long>() != 1)) {
      bad("\"ks\" must be 0 or 1");
    }
    out.ks = ks.get<int>();
  }
  if (doc.contains("c1")) {
    out.c1 = forms::CohomologyClass(integer_row(doc["c1"], "\"c1\""));
    if (out.c1->size() != out.form.rank()) {
      bad("\"c1\" length does not match the rank of the form");
    }
  }
  return out;
}

forms::CohomologyClass parse_class(std::string_view text) {
  std::vector<Integer> entries;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    entries.push_back(parse_integer(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return forms::CohomologyClass(std::move(entries));
}

}  // namespace fiveclass
