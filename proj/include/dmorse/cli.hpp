#ifndef DMORSE_CLI_HPP
#define DMORSE_CLI_HPP

/**
 * Command-line front end.  One static binary with subcommands covering the
 * whole pipeline: building gradient fields on complexes read from text
 * files, comparing the staged and fast constructions, integral and mod-p
 * homology, the two-point complete-graph model with its cohomology ring
 * table, and zero-divisor cup-length bounds for higher topological
 * complexity.
 *
 * All output is deterministic: iteration orders are fixed everywhere, so
 * identical inputs produce byte-identical reports.  Errors map to exit
 * codes: parse failure 2, contract violation 3, arithmetic overflow 4.
 */

#include <iosfwd>
#include <string>

namespace dmorse {

/// Parsed invocation of one subcommand.
struct RunConfig {
    enum class Command { Build, Pair, Betti, Cup, Conf, Tc };
    enum class Algo { Staged, Fast, Both };

    Command command = Command::Build;
    std::string input;      ///< complex file for build / pair / betti
    int m = 0;              ///< complete-graph size for cup / conf / tc
    int s = 2;              ///< number of tensor factors for tc
    Algo algo = Algo::Staged;
    long long mod_p = 0;    ///< 0 = integer coefficients, else a prime
    bool json = false;
    bool conf_betti = false;   ///< conf: print homology of the model
    bool conf_export = false;  ///< conf: print the model as complex text
    std::string output;        ///< optional file target for conf --export
};

/// Execute one parsed invocation, writing the report to `out`.
/// Returns 0; failures are reported by exception (parse_error,
/// contract_violation, arithmetic_overflow).
int run(const RunConfig& config, std::ostream& out);

/// Parse argv, execute, and map exceptions to exit codes 2 / 3 / 4.
/// Reports go to `out`, error messages to std::cerr.
int run_cli(int argc, const char* const* argv, std::ostream& out);

} // namespace dmorse

#endif // DMORSE_CLI_HPP
