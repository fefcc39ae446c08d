#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace mwl {

struct CliOptions {
    std::string config_path;
    std::string output_dir = "out";
    std::optional<long> seed;
    int threads = 1;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exit codes: 0 ok, 1 property failure, 2 config error, 3 breakdown.
int cmd_simulate(const CliOptions& opt);
int cmd_residual(const CliOptions& opt);
int cmd_rates(const CliOptions& opt);
int cmd_nonuniform(const CliOptions& opt);
int cmd_check(const CliOptions& opt);

int run_cli(int argc, char** argv);

} // namespace mwl
