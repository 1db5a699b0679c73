#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cycflat {

// Base class for all input-level failures (invalid files, invalid
// structures, violated preconditions).  Internal theorem/postcondition
// assertions throw std::logic_error instead: those indicate bugs, not
// bad input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The reflexive-transitive closure of the input relations has a cycle.
struct NotAPartialOrder : Error {
  using Error::Error;
};

// Some pair has no unique meet or join.  Carries the offending pair and
// the minimal upper / maximal lower bounds that were found instead.
struct NotALattice : Error {
  NotALattice(std::string msg, std::pair<int, int> offending,
              std::vector<int> min_uppers, std::vector<int> max_lowers)
      : Error(std::move(msg)),
        pair(offending),
        minimal_upper_bounds(std::move(min_uppers)),
        maximal_lower_bounds(std::move(max_lowers)) {}
  explicit NotALattice(std::string msg) : Error(std::move(msg)) {}

  std::pair<int, int> pair{-1, -1};
  std::vector<int> minimal_upper_bounds;
  std::vector<int> maximal_lower_bounds;
};

// A cyclic-flat family or rank assignment violates one of its rank
// inequalities; the message names the pair and the inequality.
struct RankViolation : Error {
  using Error::Error;
};

// Bad parameters for a lattice-family generator (repeated branch
// depths, empty chains, ...).
struct InvalidFamily : Error {
  using Error::Error;
};

// build_witness was asked for an element with fewer than three covers.
struct NotEnoughCovers : Error {
  using Error::Error;
};

// An exhaustive search or table would exceed its configured cap.
struct SizeLimitExceeded : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(int line_number, const std::string& msg)
      : Error("line " + std::to_string(line_number) + ": " + msg),
        line(line_number) {}
  int line;
};

}  // namespace cycflat
