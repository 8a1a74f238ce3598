#ifndef NPDNN_ERRORS_HPP
#define NPDNN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace npdnn {

/// Base class for all library errors. Carries the process exit code the
/// CLI maps the error to (0 ok, 2 usage/config, 3 I/O, 4 data, 5 training,
/// 6 tuning, 7 model format).
class Error : public std::runtime_error {
public:
    Error(const std::string& msg, int exit_code)
        : std::runtime_error(msg), exit_code_(exit_code) {}

    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

// -- usage / configuration (exit 2) -----------------------------------------

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg, 2) {}
};

class BadSpec : public Error {
public:
    explicit BadSpec(const std::string& msg) : Error(msg, 2) {}
};

class BadHyperparams : public Error {
public:
    explicit BadHyperparams(const std::string& msg) : Error(msg, 2) {}
};

class EmptySpace : public Error {
public:
    explicit EmptySpace(const std::string& msg) : Error(msg, 2) {}
};

// -- I/O (exit 3) ------------------------------------------------------------

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg, 3) {}
};

// -- data (exit 4) -----------------------------------------------------------

class MalformedCsv : public Error {
public:
    explicit MalformedCsv(const std::string& msg) : Error(msg, 4) {}
};

class BadDate : public Error {
public:
    explicit BadDate(const std::string& msg) : Error(msg, 4) {}
};

class NonMonotonicDates : public Error {
public:
    explicit NonMonotonicDates(const std::string& msg) : Error(msg, 4) {}
};

class TooFewObservations : public Error {
public:
    explicit TooFewObservations(const std::string& msg) : Error(msg, 4) {}
};

class SeriesTooShort : public Error {
public:
    explicit SeriesTooShort(const std::string& msg) : Error(msg, 4) {}
};

class MissingEndpoint : public Error {
public:
    explicit MissingEndpoint(const std::string& msg) : Error(msg, 4) {}
};

class ZeroVariance : public Error {
public:
    explicit ZeroVariance(const std::string& msg) : Error(msg, 4) {}
};

class LengthMismatch : public Error {
public:
    explicit LengthMismatch(const std::string& msg) : Error(msg, 4) {}
};

// -- training (exit 5) -------------------------------------------------------

class DivergedLoss : public Error {
public:
    explicit DivergedLoss(const std::string& msg) : Error(msg, 5) {}
};

// -- tuning (exit 6) ---------------------------------------------------------

class AllTrialsFailed : public Error {
public:
    explicit AllTrialsFailed(const std::string& msg) : Error(msg, 6) {}
};

// -- model format (exit 7) ---------------------------------------------------

class UnsupportedVersion : public Error {
public:
    explicit UnsupportedVersion(const std::string& msg) : Error(msg, 7) {}
};

class CorruptModel : public Error {
public:
    explicit CorruptModel(const std::string& msg) : Error(msg, 7) {}
};

// -- internal misuse (exit 1) ------------------------------------------------

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg, 1) {}
};

class BadArchitecture : public Error {
public:
    explicit BadArchitecture(const std::string& msg) : Error(msg, 1) {}
};

class LossActivationMismatch : public Error {
public:
    explicit LossActivationMismatch(const std::string& msg) : Error(msg, 1) {}
};

class InconsistentHistory : public Error {
public:
    explicit InconsistentHistory(const std::string& msg) : Error(msg, 1) {}
};

}  // namespace npdnn

#endif  // NPDNN_ERRORS_HPP
