#pragma once

#include <stdexcept>
#include <string>

namespace fedle {

// Base type for everything thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration value or combination (bad layer dims, C out of range, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Tensor or batch dimensions do not line up.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Malformed input file (IDX header, CSV, config syntax).
class FormatError : public Error {
public:
    using Error::Error;
};

// Partition request that the dataset cannot satisfy.
class PartitionError : public Error {
public:
    using Error::Error;
};

// Zero-magnitude vector where cosine similarity was requested.
class DegenerateVectorError : public Error {
public:
    using Error::Error;
};

// Caller violated an API contract (stepped a dead client, empty partition, ...).
class ContractError : public Error {
public:
    using Error::Error;
};

// Fewer alive clients than the per-round selection count.
class InsufficientClientsError : public Error {
public:
    using Error::Error;
};

// Histories in a comparison set are not mutually comparable.
class ComparisonError : public Error {
public:
    using Error::Error;
};

// Filesystem failure.
class IoError : public Error {
public:
    using Error::Error;
};

// Calibration grid contained no feasible point.
class CalibrationError : public Error {
public:
    using Error::Error;
};

}  // namespace fedle
