#pragma once

#include <stdexcept>
#include <string>

namespace conelab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DescriptorMismatch : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NonInvertible : public Error {
public:
    NonInvertible(const std::string& what, double abs_det);
    double abs_det() const noexcept { return abs_det_; }

private:
    double abs_det_;
};

// Pole of the j-th Gamma factor (1-based).
class PoleError : public Error {
public:
    PoleError(const std::string& what, int index);
    int index() const noexcept { return index_; }

private:
    int index_;
};

class DivergenceError : public Error {
public:
    using Error::Error;
};

class PrecisionError : public Error {
public:
    PrecisionError(const std::string& what, double estimate);
    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

class UnsupportedOperation : public Error {
public:
    using Error::Error;
};

class NotInDenseCell : public Error {
public:
    NotInDenseCell(const std::string& what, double abs_c_plus_d);
    double abs_c_plus_d() const noexcept { return value_; }

private:
    double value_;
};

}  // namespace conelab
