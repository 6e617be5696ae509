#ifndef NEGEVAL_CLI_HPP
#define NEGEVAL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace negeval::cli {

/// Process exit codes. Every failure also prints one line
/// "error[<kind>]: <message>" to the error stream.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,
  kUsage = 2,
  kParse = 3,
  kAlignment = 4,
  kPatch = 5,
  kGraph = 6,
  kIo = 7,
  kInternal = 70,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace negeval::cli

#endif  // NEGEVAL_CLI_HPP
