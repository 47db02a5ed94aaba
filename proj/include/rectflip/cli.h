#ifndef RECTFLIP_CLI_H_
#define RECTFLIP_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace rectflip::cli {

// Exit codes besides 0 (success) and 1 (verification failure).
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitNotDiagonal = 3;
inline constexpr int kExitUnflippable = 4;

// Runs the command line `args` (without the program name). Input files
// given as "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rectflip::cli

#endif  // RECTFLIP_CLI_H_
