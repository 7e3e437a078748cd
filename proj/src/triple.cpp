#include "daectl/triple.hpp"

#include <string>
#include <utility>

#include "daectl/errors.hpp"

namespace daectl {

DaeTriple::DaeTriple(RatMatrix e, RatMatrix a, RatMatrix b)
    : e_(std::move(e)), a_(std::move(a)), b_(std::move(b)) {
  auto shape = [](const RatMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); };
  if (e_.rows() == 0 || e_.cols() == 0) throw DimensionError("block E must be at least 1x1, got " + shape(e_));
  if (a_.rows() != e_.rows() || a_.cols() != e_.cols()) {
    throw DimensionError("block A has shape " + shape(a_) + " but E has shape " + shape(e_));
  }
  if (b_.rows() != e_.rows()) {
    throw DimensionError("block B has " + std::to_string(b_.rows()) + " rows but E has " +
                         std::to_string(e_.rows()));
  }
  if (b_.cols() == 0) throw DimensionError("block B must have at least one column");
}

}  // namespace daectl
