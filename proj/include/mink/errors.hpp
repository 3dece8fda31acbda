#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mink {

/// Base of all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input: malformed text, invalid spec documents, unknown names.
/// The CLI maps these to exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Mathematically ill-posed request on otherwise valid input
/// (degeneracies, domain violations). The CLI maps these to exit code 2.
class ComputeError : public Error {
public:
    using Error::Error;
};

class ParseError : public ValidationError {
public:
    ParseError(std::size_t position, const std::string& message)
        : ValidationError(message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class SpecValidationError : public ValidationError {
public:
    SpecValidationError(const std::string& field, const std::string& message)
        : ValidationError("spec field '" + field + "': " + message), field_(field) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class FileError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnknownFamily : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class BadParams : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ZeroScale : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DomainError : public ComputeError {
public:
    using ComputeError::ComputeError;
};

class LightlikeTangent : public ComputeError {
public:
    using ComputeError::ComputeError;
};

class MixedCausality : public ComputeError {
public:
    using ComputeError::ComputeError;
};

/// Carries the arclength location where a frame construction failed.
class FrameError : public ComputeError {
public:
    FrameError(const std::string& message, double s)
        : ComputeError(message + " (s=" + std::to_string(s) + ")"), s_(s) {}
    double where() const noexcept { return s_; }

private:
    double s_;
};

class DegenerateCurvature : public FrameError {
public:
    explicit DegenerateCurvature(double s)
        : FrameError("first curvature below degeneracy threshold; frame undefined", s) {}
};

class DegenerateTorsion : public FrameError {
public:
    explicit DegenerateTorsion(double s)
        : FrameError("second curvature below degeneracy threshold; curve is planar here", s) {}
};

class NullFrameVector : public FrameError {
public:
    explicit NullFrameVector(double s)
        : FrameError("frame vector is lightlike; curve outside supported class", s) {}
};

class InsufficientSamples : public ComputeError {
public:
    using ComputeError::ComputeError;
};

class TheoremHypothesisViolated : public ComputeError {
public:
    using ComputeError::ComputeError;
};

}  // namespace mink
