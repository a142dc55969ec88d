#pragma once

#include "braidkit/suites.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace braidkit::cli {

inline nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["status"] = to_string(r.status);
    j["witness"] = r.witness;
    j["seconds"] = r.seconds;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    return j;
}

inline CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "skipped") return CheckStatus::skipped;
    throw std::invalid_argument("unknown status " + s);
}

inline CheckReport from_json(const nlohmann::ordered_json& j) {
    CheckReport r;
    r.id = j.at("id").get<std::string>();
    r.status = status_from_string(j.at("status").get<std::string>());
    r.witness = j.at("witness").get<std::string>();
    r.seconds = j.at("seconds").get<double>();
    for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
    return r;
}

inline std::string json_lines(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    for (const auto& r : reports) out << to_json(r).dump() << '\n';
    return out.str();
}

inline std::string markdown(const std::vector<CheckReport>& reports) {
    auto cell = [](std::string s) {
        std::string out;
        for (char c : s) {
            if (c == '|') out += "\\|";
            else if (c == '\n') out += ' ';
            else out += c;
        }
        return out;
    };
    std::ostringstream out;
    out << "| check | status | witness | params |\n|---|---|---|---|\n";
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [k, v] : r.params) params += (params.empty() ? "" : ", ") + k + "=" + v;
        out << "| " << cell(r.id) << " | " << to_string(r.status) << " | " << cell(r.witness) << " | " << cell(params)
            << " |\n";
    }
    return out.str();
}

}  // namespace braidkit::cli
