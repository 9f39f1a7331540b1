#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bellctx/config.hpp"
#include "bellctx/linalg.hpp"
#include "bellctx/symmetric.hpp"

namespace bellctx {

// Parsed --state argument: either a symmetric amplitude triple or a full
// two-qubit amplitude vector, never both.
struct StateSpec {
  std::optional<std::array<cplx, 3>> symmetric;
  std::optional<std::array<cplx, 4>> two_qubit;
};

// Inline form "a,b,c" (real symmetric triple) or a path to a JSON file with
// exactly one of the keys "symmetric" / "two_qubit", whose entries are
// numbers or [re, im] pairs.
StateSpec parse_state_spec(const std::string& arg);

// Normalized views of a StateSpec. Four-amplitude input to the qutrit view
// must be swap-symmetric (throws NotSymmetric otherwise).
PureState two_qubit_state(const StateSpec& spec);
QutritPure qutrit_state(const StateSpec& spec);

// Exit codes: 0 success, 1 failed checks (reproduce), 2 input errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bellctx
