#include "isotonic/cli/manifest.hpp"

#include "isotonic/error.hpp"

namespace isotonic::cli {

nlohmann::json RunManifest::to_json() const {
    return {{"command", command},
            {"parameters", parameters},
            {"output_format", output_format == Format::Json ? "json" : "csv"},
            {"seedless", true}};
}

RunManifest RunManifest::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("command") || !j["command"].is_string()) {
        throw DomainError("manifest: missing \"command\"");
    }
    RunManifest m;
    m.command = j["command"].get<std::string>();
    if (j.contains("parameters")) {
        if (!j["parameters"].is_object()) throw DomainError("manifest: \"parameters\" must be an object");
        m.parameters = j["parameters"];
    }
    const std::string fmt = j.value("output_format", "csv");
    if (fmt == "csv") {
        m.output_format = Format::Csv;
    } else if (fmt == "json") {
        m.output_format = Format::Json;
    } else {
        throw DomainError("manifest: unknown output_format '" + fmt + "'");
    }
    return m;
}

}  // namespace isotonic::cli
