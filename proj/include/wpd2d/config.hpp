#pragma once

#include <map>
#include <string>

#include "wpd2d/channel.hpp"
#include "wpd2d/energy_trading.hpp"
#include "wpd2d/params.hpp"
#include "wpd2d/sweep.hpp"

namespace wpd2d::harness {

using KeyValues = std::map<std::string, std::string>;

// Flat `key = value` lines; '#' starts a comment. Throws ConfigError on
// malformed lines or duplicate keys.
KeyValues parse_config_text(const std::string& text);
KeyValues load_config_file(const std::string& path);

struct RunConfig {
    SystemParams params;
    ChannelVariances variances;
    energy_trading::ThetaMode et_theta_mode = energy_trading::ThetaMode::nested;
    SweepSpec sweep;
    bool has_sweep = false;  // set when any sweep key appears
};

// Applies recognized keys onto defaults; unknown keys raise ConfigError.
RunConfig apply_config(const KeyValues& kv, RunConfig base = {});

}  // namespace wpd2d::harness
