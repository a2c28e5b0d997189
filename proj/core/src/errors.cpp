#include "conelab/errors.hpp"

#include <sstream>

namespace conelab {

namespace {
std::string num(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}
}  // namespace

NonInvertible::NonInvertible(const std::string& what, double abs_det)
    : Error(what + " (|det| = " + num(abs_det) + ")"), abs_det_(abs_det) {}

PoleError::PoleError(const std::string& what, int index)
    : Error(what + " (factor j = " + std::to_string(index) + ")"), index_(index) {}

PrecisionError::PrecisionError(const std::string& what, double estimate)
    : Error(what + " (estimate " + num(estimate) + ")"), estimate_(estimate) {}

NotInDenseCell::NotInDenseCell(const std::string& what, double abs_c_plus_d)
    : Error(what), value_(abs_c_plus_d) {}

}  // namespace conelab
