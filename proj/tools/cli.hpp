#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zz::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one invocation; `args` excludes the program name. Graph arguments
/// given as "-" read from `in`, outputs given as "-" go to `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace zz::cli
