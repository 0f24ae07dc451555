#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qinterp::cli {

struct RunConfig {
    std::string command;
    std::string input;
    std::string out;
    std::string reference;
    std::string method;  // empty: per-command default
    int n = 4;
    int m = 1;
    int s = 3;
    double sigma = 0.125;
    double mean = 0.5;
    std::string window = "uniform";
    bool fast = true;
    std::uint64_t seed = 1;
    int cases = 200;
    int max_qubits = 8;
    double budget_gib = 8.0;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kArgument = 2;
inline constexpr int kResource = 3;
inline constexpr int kNumerical = 4;

// Bytes needed to hold a statevector on q qubits.
double state_bytes(int q);
// Throws ResourceError when 16 * 2^q bytes exceed the configured budget.
void check_budget(const RunConfig& cfg, int q);

// Parses argv-style arguments (without the program name) and runs the
// command. JSON goes to `out`, diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_interp_dist(const RunConfig& cfg, std::ostream& out);
int cmd_interp_image(const RunConfig& cfg, std::ostream& out);
int cmd_table1(const RunConfig& cfg, std::ostream& out);
int cmd_bounds(const RunConfig& cfg, std::ostream& out);
int cmd_unary(const RunConfig& cfg, std::ostream& out);

}  // namespace qinterp::cli
