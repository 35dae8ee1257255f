#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sigdoc/report.hpp"

namespace sigdoc::svg {

using Series = std::pair<std::string, const Cdf*>;

/// Step plot of one or more CDFs on [0,1]x[0,1].
std::string render_cdfs(const std::vector<Series>& series, const std::string& title);

}  // namespace sigdoc::svg
