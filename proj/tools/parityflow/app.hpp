#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace parityflow::cli {

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2 };

struct Options {
    bool color = false;
};

// Runs one command line; output goes to out/err, never to the process streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Options& opt = {});

}  // namespace parityflow::cli
