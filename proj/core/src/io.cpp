// Copyright 2026 The radiolabel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "radiolabel/io.hpp"

#include <nlohmann/json.hpp>

#include "radiolabel/errors.hpp"

namespace radiolabel::io {

namespace {

using Json = nlohmann::ordered_json;

Json parse_object(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::parse_error, "expected a JSON object");
  return doc;
}

template <class T>
std::vector<T> read_array(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw Error(Errc::parse_error, std::string("missing array '") + key + "'");
  }
  std::vector<T> out;
  out.reserve(doc[key].size());
  for (const auto& item : doc[key]) {
    if (!item.is_number_integer()) {
      throw Error(Errc::parse_error, std::string("'") + key + "' must hold integers");
    }
    const auto value = item.get<std::int64_t>();
    if constexpr (std::is_unsigned_v<T>) {
      if (value < 0) throw Error(Errc::parse_error, std::string("negative entry in '") + key + "'");
    }
    out.push_back(static_cast<T>(value));
  }
  return out;
}

std::string graph_field(const Json& doc) {
  if (!doc.contains("graph")) return {};
  if (!doc["graph"].is_string()) throw Error(Errc::parse_error, "'graph' must be a string");
  return doc["graph"].get<std::string>();
}

std::string dump(const Json& doc) { return doc.dump() + "\n"; }

}  // namespace

std::string to_json(const OrderingDocument& doc) {
  Json out;
  if (!doc.graph.empty()) out["graph"] = doc.graph;
  out["order"] = std::vector<VertexId>(doc.order.sequence().begin(), doc.order.sequence().end());
  if (!doc.tuples.empty()) {
    Json tuples = Json::array();
    for (const auto& x : doc.tuples) tuples.push_back(x.coordinates);
    out["tuples"] = std::move(tuples);
  }
  return dump(out);
}

std::string to_json(const LabelingDocument& doc) {
  Json out;
  out["graph"] = doc.graph;
  out["labels"] = std::vector<Label>(doc.labeling.labels().begin(), doc.labeling.labels().end());
  out["span"] = doc.labeling.span();
  if (doc.consecutive) out["consecutive"] = *doc.consecutive;
  return dump(out);
}

std::string to_json(const SearchResult& result, std::string_view graph) {
  Json out;
  out["graph"] = std::string(graph);
  out["status"] = std::string(to_string(result.status));
  out["span"] = result.span ? Json(*result.span) : Json(nullptr);
  if (result.witness) {
    out["order"] = std::vector<VertexId>(result.witness->sequence().begin(),
                                         result.witness->sequence().end());
  } else {
    out["order"] = nullptr;
  }
  if (result.labeling) {
    out["labels"] = std::vector<Label>(result.labeling->labels().begin(),
                                       result.labeling->labels().end());
  } else {
    out["labels"] = nullptr;
  }
  out["orderings_examined"] = result.orderings_examined;
  return dump(out);
}

std::string to_json(const ThresholdReport& report) {
  Json out;
  out["n"] = report.n;
  out["diam"] = report.diam;
  out["s"] = report.s;
  out["closed_form_s"] = report.closed_form_s ? Json(*report.closed_form_s) : Json(nullptr);
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"t", e.t}, {"verdict", std::string(to_string(e.verdict))}});
  }
  out["verdicts"] = std::move(entries);
  return dump(out);
}

OrderingDocument parse_ordering(std::string_view text) {
  const Json doc = parse_object(text);
  OrderingDocument out;
  out.graph = graph_field(doc);
  try {
    out.order = Ordering(read_array<VertexId>(doc, "order"));
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    throw Error(Errc::parse_error, e.what());
  }
  if (doc.contains("tuples")) {
    if (!doc["tuples"].is_array()) throw Error(Errc::parse_error, "'tuples' must be an array");
    for (const auto& row : doc["tuples"]) {
      if (!row.is_array()) throw Error(Errc::parse_error, "'tuples' must hold arrays");
      ProductVertex x;
      for (const auto& c : row) {
        if (!c.is_number_unsigned()) throw Error(Errc::parse_error, "tuple entries must be indices");
        x.coordinates.push_back(c.get<VertexId>());
      }
      out.tuples.push_back(std::move(x));
    }
  }
  return out;
}

LabelingDocument parse_labeling(std::string_view text) {
  const Json doc = parse_object(text);
  LabelingDocument out;
  out.graph = graph_field(doc);
  try {
    out.labeling = Labeling(read_array<Label>(doc, "labels"));
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    throw Error(Errc::parse_error, e.what());
  }
  if (doc.contains("span")) {
    if (!doc["span"].is_number_integer() || doc["span"].get<Label>() != out.labeling.span()) {
      throw Error(Errc::parse_error, "'span' does not equal the largest label");
    }
  }
  if (doc.contains("consecutive") && doc["consecutive"].is_boolean()) {
    out.consecutive = doc["consecutive"].get<bool>();
  }
  return out;
}

}  // namespace radiolabel::io
