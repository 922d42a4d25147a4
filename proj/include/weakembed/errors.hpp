#pragma once

#include <stdexcept>
#include <string>

namespace we {

enum class Errc {
  LoopEdge,
  DuplicateEdge,
  RotationMismatch,
  DegreeTooLow,
  NotACycle,
  NotDegree2,
  InvalidSplitSet,
  PhiNotAdjacent,
  LoopInG,
  NegativePotential,
  DimensionMismatch,
  ImpossiblePrescription,
  NotSimplified,
  ClusterLinkNotEmbeddable,
  UnexpectedShape,
  BudgetExceeded,
  NonRationalInput,
  TooManyClusters,
  InvalidInput,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace we
