// config.hpp
// Plain-text run configuration: `key = value` lines, `#` comments, unknown
// keys are an error. CLI flags override config values; the default config
// path comes from the RIESZWAVE_CONFIG environment variable when set.
#pragma once

#include <string>
#include "rieszwave/types.hpp"

namespace rieszwave {

struct RunConfig {
    PhysicalParams params;
    SeriesControls series;
    QuadratureControls quad;
    std::string out_dir = ".";
    std::string float_format = "shortest";  // "shortest" or a digit count

    void validate() const;
};

// Parse a config file. Throws std::domain_error on unknown keys, malformed
// lines, or values violating the target-type invariants.
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text);

// Config from $RIESZWAVE_CONFIG if set (and readable), defaults otherwise.
RunConfig load_default_config();

}  // namespace rieszwave
