#include "tcc/json_io.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace tcc {

using nlohmann::json;

json config_to_json(const TensorConfig& cfg, const json& meta) {
    json j;
    j["n"] = cfg.n();
    j["m"] = cfg.m();
    j["colors"] = cfg.colors();
    j["meta"] = meta;
    return j;
}

TensorConfig config_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("colors"))
        throw std::invalid_argument("configuration JSON needs fields n, m, colors");
    TupleSpace space{j.at("n").get<int>(), j.at("m").get<int>()};
    auto colors = j.at("colors").get<std::vector<std::uint32_t>>();
    if (colors.size() != space.size())
        throw std::invalid_argument("configuration JSON: colors has wrong length");
    return TensorConfig(space, std::move(colors));
}

json partition_to_json(const CyclicCarrier& carrier,
                       const std::vector<std::vector<int>>& classes) {
    json j;
    j["carrier"] = carrier.to_string();
    j["classes"] = classes;
    return j;
}

std::pair<CyclicCarrier, std::vector<std::vector<int>>> partition_from_json(const json& j) {
    if (!j.is_object() || !j.contains("carrier") || !j.contains("classes"))
        throw std::invalid_argument("partition JSON needs fields carrier, classes");
    auto carrier = CyclicCarrier::parse(j.at("carrier").get<std::string>());
    auto classes = j.at("classes").get<std::vector<std::vector<int>>>();
    return {carrier, std::move(classes)};
}

json report_to_json(const Report& rep) {
    json j;
    j["suite"] = rep.suite;
    j["p"] = rep.p;
    j["complete"] = rep.complete;
    j["pass"] = rep.pass;
    json items = json::array();
    for (const auto& it : rep.items)
        items.push_back({{"name", it.name}, {"pass", it.pass}, {"detail", it.detail}});
    j["items"] = items;
    json results = json::array();
    for (const auto& r : rep.results) {
        json e;
        e["classes"] = r.num_classes;
        e["ast"] = r.ast;
        e["aut_order"] = r.aut_order;
        e["aut_matches"] = r.aut_matches ? json(*r.aut_matches) : json(nullptr);
        e["schurian"] = r.schurian;
        results.push_back(e);
    }
    j["results"] = results;
    return j;
}

json load_json(const std::string& path) {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

TensorConfig load_config(const std::string& path) { return config_from_json(load_json(path)); }

void save_json(const json& j, const std::string& path) {
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    out << j.dump(2) << "\n";
}

}  // namespace tcc
