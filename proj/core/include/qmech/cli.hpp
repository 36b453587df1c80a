#ifndef QMECH_CLI_HPP
#define QMECH_CLI_HPP

// Command dispatch, callable in-process (the installed binary is a thin
// wrapper).  Verbs:
//
//   normalize        parse an expression and print its normal-ordered form
//   bracket          q-Poisson bracket of two expressions
//   hamilton         equations of motion for a Hamiltonian
//   evolve-symbolic  time derivative of an observable under a Hamiltonian
//   conserve         conserved deformed energy for a kinetic+potential system
//   evolve           numeric integration of the commutative shadow, CSV out
//   verify           run self-check suites
//
// Returns the process exit status: 0 on success, 1 on a domain error, 2 on
// a usage error.  All output goes through the supplied streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace qmech::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmech::cli

#endif
