#pragma once

#include <json.hpp>

#include "cnest/partition.hpp"

namespace cnest {

inline SetPartition SetPartition::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("type") || !j.contains("n") || !j.contains("blocks"))
        throw std::invalid_argument("partition record needs keys: type, n, blocks");
    Ctype t = ctype_from_string(j["type"].get<std::string>());
    int n = j["n"].get<int>();
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j["blocks"]) blocks.push_back(b.get<std::vector<int>>());
    return SetPartition(t, n, std::move(blocks));
}

}  // namespace cnest
