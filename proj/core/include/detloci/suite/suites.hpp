#pragma once

#include "detloci/suite/runner.hpp"

#include <string_view>
#include <vector>

namespace detloci::suite {

/// Registered property suites, in a fixed order: angles, grassmann, chern.
const std::vector<Suite>& all_suites();

/// Suites of one module ("angles", "grassmann", "chern").
std::vector<Suite> module_suites(std::string_view module);

/// nullptr when unknown.
const Suite* find_suite(std::string_view name);

}  // namespace detloci::suite
