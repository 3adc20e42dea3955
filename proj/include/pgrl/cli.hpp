#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace pgrl {

/// Run one CLI invocation (args exclude the program name) and return the
/// process exit code: 0 all checks passed, 1 a mathematical check failed,
/// 2 usage or parse error. All reports are emitted as JSON on `out`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(const std::vector<std::string>& args);

} // namespace pgrl
