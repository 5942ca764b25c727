#pragma once

#include <ostream>

namespace schubert {

/// Runs the built-in property checks at small ranks, printing one line per
/// check. Returns true when every check passes.
bool run_selftest(std::ostream& out, int jobs = 1);

}  // namespace schubert
