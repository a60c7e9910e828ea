#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "subchi/submeasure.hpp"

namespace subchi {

// Submeasure spec files:
//   {"atoms": 4, "kind": "uniform", "weight": "1/4"}
//   {"atoms": 3, "kind": "weighted", "weights": ["1/2", "1/4", "1/4"]}
//   {"atoms": 4, "kind": "capped", "cap": "1", "c": "1/2"}        (or "weights")
//   {"atoms": 2, "kind": "table", "values": {"0x1": "2", "0x2": "1", "0x3": "1"}}
// Rationals are "a/b" strings or JSON integers. Table keys are subset bitmasks
// in hex (bit i-1 = atom i); "0x0" may be omitted and then defaults to 0.
FiniteSubmeasure submeasure_from_json(const nlohmann::json& j);
FiniteSubmeasure parse_submeasure(std::string_view text);
nlohmann::json submeasure_to_json(const FiniteSubmeasure& mu);

// Partitions: list of lists of 1-based atoms, e.g. [[1,2],[3,4]].
Partition partition_from_json(std::size_t universe, const nlohmann::json& j);
Partition parse_partition(std::size_t universe, std::string_view text);
nlohmann::json partition_to_json(const Partition& p);

Rational rational_from_json(const nlohmann::json& j);

}  // namespace subchi
