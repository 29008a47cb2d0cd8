#pragma once

#include <iosfwd>

namespace nerveforge {

// Runs the full acceptance suite: one PASS/FAIL line per criterion plus a
// summary. Returns the number of failed criteria.
int run_acceptance(std::ostream& out);

}  // namespace nerveforge
