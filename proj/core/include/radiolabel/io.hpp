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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radiolabel/bounds.hpp"
#include "radiolabel/graph.hpp"
#include "radiolabel/labeling.hpp"
#include "radiolabel/search.hpp"

// JSON documents exchanged by the command-line tool.
//
//   ordering:  {"graph": REF?, "order": [v...], "tuples": [[c...]...]?}
//   labeling:  {"graph": REF, "labels": [f(v)...], "span": N, "consecutive": B?}
//
// Vertex indices are 0-based. REF names the graph: a file path or a
// builtin reference such as "complete:3^2".

namespace radiolabel::io {

struct OrderingDocument {
  std::string graph;
  Ordering order = Ordering({});
  std::vector<ProductVertex> tuples;
};

struct LabelingDocument {
  std::string graph;
  Labeling labeling = Labeling({});
  std::optional<bool> consecutive;
};

std::string to_json(const OrderingDocument& doc);
std::string to_json(const LabelingDocument& doc);
std::string to_json(const SearchResult& result, std::string_view graph);
std::string to_json(const ThresholdReport& report);

/// Throw ParseError on malformed input or a span that disagrees with the labels.
OrderingDocument parse_ordering(std::string_view text);
LabelingDocument parse_labeling(std::string_view text);

}  // namespace radiolabel::io
