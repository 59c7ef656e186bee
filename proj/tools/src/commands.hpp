#pragma once

#include "config.hpp"
#include "report.hpp"

namespace rayzeta::cli {

// Each command returns a report whose exit_code is 0, 3 or 4; config
// problems are thrown as ConfigError.
Report cmd_zeta(const RunConfig& config);
Report cmd_family(const RunConfig& config);
Report cmd_lfunc(const RunConfig& config);
Report cmd_verify(const RunConfig& config);

}  // namespace rayzeta::cli
