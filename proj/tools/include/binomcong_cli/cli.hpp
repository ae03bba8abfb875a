#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "binomcong/registry.hpp"

namespace binomcong::cli {

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

/// `args` excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binomcong::cli
