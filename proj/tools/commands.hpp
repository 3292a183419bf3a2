#pragma once

#include <iosfwd>

#include "config.hpp"

namespace sovchain {

// each returns the process exit code: 0 ok, 1 a check failed
int cmd_verify(const RunConfig& cfg, std::ostream& out);
int cmd_spectrum(const RunConfig& cfg, std::ostream& out);
int cmd_scalar(const RunConfig& cfg, std::ostream& out);
int cmd_sweep(const RunConfig& cfg, std::ostream& out);

// suites run for `name` given the applicability of the parameter set
std::vector<std::string> plan_suites(const std::string& name, const osov::SovApplicability& app);

}  // namespace sovchain
