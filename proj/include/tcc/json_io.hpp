#ifndef TCC_JSON_IO_HPP
#define TCC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "tcc/config.hpp"
#include "tcc/pipeline.hpp"
#include "tcc/schur.hpp"

namespace tcc {

// {"n": 5, "m": 3, "colors": [... colors in tuple-rank order ...],
//  "meta": {...}} -- meta is optional on input and free-form.
nlohmann::json config_to_json(const TensorConfig& cfg,
                              const nlohmann::json& meta = nlohmann::json::object());
TensorConfig config_from_json(const nlohmann::json& j);

// {"carrier": "zmod:6" | "fstar:7", "classes": [[...], ...]}
nlohmann::json partition_to_json(const CyclicCarrier& carrier,
                                 const std::vector<std::vector<int>>& classes);
std::pair<CyclicCarrier, std::vector<std::vector<int>>> partition_from_json(
    const nlohmann::json& j);

// {"suite", "p", "complete", "results": [{"classes", "ast", "aut_order",
//  "aut_matches", "schurian"}, ...]}
nlohmann::json report_to_json(const Report& rep);

TensorConfig load_config(const std::string& path);  // "-" = stdin
void save_json(const nlohmann::json& j, const std::string& path);  // "-" = stdout
nlohmann::json load_json(const std::string& path);

}  // namespace tcc

#endif
