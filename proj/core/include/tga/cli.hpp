#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace tga {

// Runs one command (verb + arguments, without the program name). Streams are
// injectable for testing; "-" as a path means in/out.
//
// Exit codes: 0 success / positive verdict, 1 parse or schema error,
// 2 precondition or internal error, 3 negative verdict.
int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace tga
