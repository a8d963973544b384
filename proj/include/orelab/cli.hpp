#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orelab {

/// The command line:
///   orelab run <config.json> [--seed N] [--jobs K] [--format human|json]
///   orelab check-maps <config.json> [--seed N]
///   orelab oracle <ring-spec> [--format human|json]
/// <ring-spec> is inline JSON or a path to a file holding it. ORELAB_SEED
/// provides the default seed. Exit codes: 0 all pass, 1 a check failed,
/// 2 configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orelab
