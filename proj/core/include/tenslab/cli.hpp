#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tenslab {

// Exit codes: 0 success / affirmative, 1 usage or input error, 2 certified
// negative (obstruction found, property fails), 3 internal consistency
// failure.
struct CommandResult {
    int exit_code = 0;
    std::string output;  // what was printed
};

CommandResult dispatch(const std::vector<std::string>& args, std::ostream& out);

int cli_main(int argc, char** argv);

}  // namespace tenslab
