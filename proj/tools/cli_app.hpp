#pragma once

#include <string>
#include <vector>

namespace zs::cli {

// Exit-code contract: 0 success, 1 identity failure, 2 evaluation error,
// 3 no root, 64 usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIdentityFailure = 1;
inline constexpr int kExitEvalError = 2;
inline constexpr int kExitNoRoot = 3;
inline constexpr int kExitUsage = 64;

int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace zs::cli
