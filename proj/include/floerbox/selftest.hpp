// Built-in golden checks: survivor tables for the trefoil satellites, the
// square-summand homology table, the differential census, staircase grading
// closed forms, and Alexander-polynomial anchors. The CLI exposes these as
// the `selftest` subcommand.
#pragma once

#include <iosfwd>

namespace floerbox {

// Runs every golden check, printing one "ok <name>" or "FAIL <name>: why"
// line per check. Returns true when all pass.
bool run_selftest(std::ostream& out);

}  // namespace floerbox
