#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lombardi {

/// Machine-readable failure reasons. The names are what the CLI prints.
enum class ErrorCode {
  // geometry
  CoincidentPoints,
  DegenerateArc,
  DegenerateLocus,
  IdenticalCircles,
  InfiniteImage,
  PointOutsideWedge,
  BisectionFailed,
  // input
  ParseError,
  InvalidRotation,
  MultiEdge,
  InvalidHalin,
  MultiEdgeOnExpansion,
  TooManyInwardNeighbors,
  InvalidPlan,
  // decomposition preconditions
  OddDegree,
  UnbalancedCircuit,
  NotEvenRegular,
  NotRegular,
  NotRegularBipartite,
  // layout rejections ("the math says no")
  NoPerfectMatching,
  NoHamiltonianOrEvenFactor,
  SearchBudgetExceeded,
  InfeasibleCase,
  PerturbationExhausted,
  NoClearPoint,
  NotTwoDegenerate,
  NotThreeDegenerate,
  CoincidentPlacement,
  RootFindingFailed,
  InconsistentThirdConstraint,
  // a supplied drawing fails the checks
  VerificationFailed,
};

std::string_view to_string(ErrorCode code);

/// True for failures that mean "no drawing exists / could be found", as
/// opposed to malformed input.
bool is_layout_rejection(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lombardi
