#pragma once

#include <string>
#include <vector>

#include "hml/io.hpp"

namespace hml::cli {

/// Dispatches one command line (without the program name). Never throws;
/// failures are encoded in the result status and diagnostics.
CommandResult runCommand(const std::vector<std::string>& args);

/// Renders the payload as aligned tables (default CLI output).
std::string renderText(const std::string& command, const Json& payload);

/// Full entry point: parse, run, print, map status to exit code.
int runMain(int argc, char** argv);

} // namespace hml::cli
