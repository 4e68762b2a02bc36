#ifndef TOOLS_ACCEPTANCE_HPP
#define TOOLS_ACCEPTANCE_HPP

#include <ostream>
#include <vector>

// Runs the acceptance suite (all 14 criteria, or the requested subset),
// printing one "criterion <k> PASS|FAIL ..." line per criterion.
// Returns the number of failures.
int run_acceptance(const std::vector<int>& only, std::ostream& out,
                   const std::string& data_dir);

#endif
