#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace ineq::cli {

// Exit codes.
inline constexpr int kTrue = 0;      // proved, implied, achievable, member
inline constexpr int kFalse = 1;     // disproved, not implied, not achievable
inline constexpr int kUnknown = 2;   // includes "not implied by the cone"
inline constexpr int kUsage = 64;    // bad arguments or unparsable input
inline constexpr int kInternal = 70;

// vars X1 X2 X3 X4
// assume: I(X1;X2) = 0
// augment: zy98
// prove: I(X3;X4) <= I(X3;X4|X1) + I(X3;X4|X2)
struct ProblemFile {
    std::vector<std::string> vars;
    std::vector<std::string> assumptions;
    bool disprove = false;
    std::string goal;
    std::map<std::string, std::string> options;  // augment, alphabet, budget, iterations, seed, jobs
};

// Throws Error(InvalidArgument) naming the offending line.
ProblemFile parse_problem_file(std::istream& in);

// Runs one command line (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ineq::cli
