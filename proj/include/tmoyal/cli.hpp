// Command-line front end. Exposed as a library call so tests drive it
// in-process; tools/tmoyal_cli.cpp is a thin main.
//
// Commands: star, spectrum, eigenstate, oracle, recurrence, asympt, verify.
// Exit codes: 0 ok, 1 verification failure, 2 expression parse error,
// 3 mode/parameter error, 4 I/O error, 5 solver failure.
#pragma once

#include <string>
#include <vector>

namespace tmoyal {

int run_cli(const std::vector<std::string>& args);  // args without argv[0]
int run_cli(int argc, char** argv);

}  // namespace tmoyal
