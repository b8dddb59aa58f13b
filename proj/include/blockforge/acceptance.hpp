#ifndef BLOCKFORGE_ACCEPTANCE_HPP
#define BLOCKFORGE_ACCEPTANCE_HPP

#include <iosfwd>

namespace blockforge {

// Runs the full acceptance suite, printing one pass/fail line per criterion.
// Returns true iff every criterion passes.
bool run_acceptance(std::ostream& out);

} // namespace blockforge

#endif
