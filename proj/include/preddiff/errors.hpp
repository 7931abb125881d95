#pragma once

#include <stdexcept>
#include <string>

namespace preddiff {

// Error taxonomy mirrors the CLI exit codes: config 2, data 3,
// classifier/sampler runtime 4, training 5.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct DataError : Error {
    using Error::Error;
};

struct ClassifierError : Error {
    using Error::Error;
};

struct SamplerError : Error {
    using Error::Error;
};

struct TrainingError : Error {
    using Error::Error;
};

// External-protocol failures, distinguishable by the caller.
struct ProtocolError : ClassifierError {
    using ClassifierError::ClassifierError;
};

struct ProcessError : ClassifierError {
    using ClassifierError::ClassifierError;
};

struct TimeoutError : ClassifierError {
    using ClassifierError::ClassifierError;
};

inline int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return 2;
    if (dynamic_cast<const DataError*>(&e)) return 3;
    if (dynamic_cast<const TrainingError*>(&e)) return 5;
    if (dynamic_cast<const ClassifierError*>(&e)) return 4;
    if (dynamic_cast<const SamplerError*>(&e)) return 4;
    return 1;
}

} // namespace preddiff
