#include "lacost/error.hpp"

namespace lacost {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::Partition: return "partition";
    case ErrorKind::Coverage: return "coverage";
    case ErrorKind::Adjacency: return "adjacency";
    case ErrorKind::DegenerateTally: return "degenerate-tally";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::InvalidProbability: return "invalid-probability";
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Config: return "config";
  }
  return "unknown";
}

}  // namespace lacost
