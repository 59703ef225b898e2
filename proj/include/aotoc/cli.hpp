// Command-line front end over the experiment drivers.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace aotoc::cli {

enum class Format { JSON, CSV };

struct RunConfig {
    std::string command;
    std::uint64_t seed = 0;
    double eps_deg = 1e-9;
    double eps_res = 1e-9;
    double eps_descent = 1e-8;
    std::string output_path;  // empty: standard output
    Format format = Format::JSON;
    int threads = 1;
};

// Exit codes: 0 success, 1 usage error or unwritable output, 2 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aotoc::cli
