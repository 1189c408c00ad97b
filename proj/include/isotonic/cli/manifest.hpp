#pragma once

#include <string>

#include <json.hpp>

namespace isotonic::cli {

enum class Format { Csv, Json };

/// Everything needed to re-run a command. Parameters hold the physical inputs and
/// grid settings keyed by their flag name without dashes ("g", "n-max", ...).
struct RunManifest {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    Format output_format = Format::Csv;

    nlohmann::json to_json() const;
    /// Throws DomainError on a malformed document.
    static RunManifest from_json(const nlohmann::json& j);
};

}  // namespace isotonic::cli
