// Command-line surface: subcommand dispatch, output formatting, the resource
// guard, and the on-disk result cache keyed by a digest of the canonical
// request.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace striphom {

// 64-bit FNV-1a digest (cache keys).
std::uint64_t fnv1a64(std::string_view s);

// Runs one command. `args` excludes the program name. Exit codes:
// 0 success, 1 verification failure, 2 usage error, 3 resource guard refusal.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// main() adapter around the stream overload (stdout/stderr).
int run_cli(int argc, const char* const* argv);

}  // namespace striphom
