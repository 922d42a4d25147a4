#include "weakembed/errors.hpp"

namespace we {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::RotationMismatch: return "RotationMismatch";
    case Errc::DegreeTooLow: return "DegreeTooLow";
    case Errc::NotACycle: return "NotACycle";
    case Errc::NotDegree2: return "NotDegree2";
    case Errc::InvalidSplitSet: return "InvalidSplitSet";
    case Errc::PhiNotAdjacent: return "PhiNotAdjacent";
    case Errc::LoopInG: return "LoopInG";
    case Errc::NegativePotential: return "NegativePotential";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ImpossiblePrescription: return "ImpossiblePrescription";
    case Errc::NotSimplified: return "NotSimplified";
    case Errc::ClusterLinkNotEmbeddable: return "ClusterLinkNotEmbeddable";
    case Errc::UnexpectedShape: return "UnexpectedShape";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NonRationalInput: return "NonRationalInput";
    case Errc::TooManyClusters: return "TooManyClusters";
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace we
