#include "lombardi/error.hpp"

namespace lombardi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::DegenerateArc: return "DegenerateArc";
    case ErrorCode::DegenerateLocus: return "DegenerateLocus";
    case ErrorCode::IdenticalCircles: return "IdenticalCircles";
    case ErrorCode::InfiniteImage: return "InfiniteImage";
    case ErrorCode::PointOutsideWedge: return "PointOutsideWedge";
    case ErrorCode::BisectionFailed: return "BisectionFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidRotation: return "InvalidRotation";
    case ErrorCode::MultiEdge: return "MultiEdge";
    case ErrorCode::InvalidHalin: return "InvalidHalin";
    case ErrorCode::MultiEdgeOnExpansion: return "MultiEdgeOnExpansion";
    case ErrorCode::TooManyInwardNeighbors: return "TooManyInwardNeighbors";
    case ErrorCode::InvalidPlan: return "InvalidPlan";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::UnbalancedCircuit: return "UnbalancedCircuit";
    case ErrorCode::NotEvenRegular: return "NotEvenRegular";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::NotRegularBipartite: return "NotRegularBipartite";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::NoHamiltonianOrEvenFactor: return "NoHamiltonianOrEvenFactor";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::InfeasibleCase: return "InfeasibleCase";
    case ErrorCode::PerturbationExhausted: return "PerturbationExhausted";
    case ErrorCode::NoClearPoint: return "NoClearPoint";
    case ErrorCode::NotTwoDegenerate: return "NotTwoDegenerate";
    case ErrorCode::NotThreeDegenerate: return "NotThreeDegenerate";
    case ErrorCode::CoincidentPlacement: return "CoincidentPlacement";
    case ErrorCode::RootFindingFailed: return "RootFindingFailed";
    case ErrorCode::InconsistentThirdConstraint: return "InconsistentThirdConstraint";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

bool is_layout_rejection(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoPerfectMatching:
    case ErrorCode::NoHamiltonianOrEvenFactor:
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::InfeasibleCase:
    case ErrorCode::PerturbationExhausted:
    case ErrorCode::NoClearPoint:
    case ErrorCode::NotTwoDegenerate:
    case ErrorCode::NotThreeDegenerate:
    case ErrorCode::CoincidentPlacement:
    case ErrorCode::RootFindingFailed:
    case ErrorCode::InconsistentThirdConstraint:
    case ErrorCode::NotRegular:
    case ErrorCode::BisectionFailed:
    case ErrorCode::VerificationFailed:
      return true;
    default:
      return false;
  }
}

}  // namespace lombardi
