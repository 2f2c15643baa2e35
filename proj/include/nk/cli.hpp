#pragma once
// The nkdeform command set, callable in-process. Exit codes: 0 success,
// 1 usage or input error, 2 internal invariant failure.
#include <iosfwd>
#include <string>
#include <vector>

namespace nk {

inline constexpr const char *kEngineVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;

// args excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace nk
