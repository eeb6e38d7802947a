#pragma once

#include <stdexcept>
#include <string>

namespace mirkit {

// Root of the library's error hierarchy. The three direct children map
// onto the CLI exit codes: UsageError -> 1, DataError -> 2, IoError -> 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class UsageError : public Error {
 public:
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

// Fatal ingestion problems: missing header row, column map naming a header
// that does not exist. Per-row problems are collected in the IngestReport
// instead of thrown.
class IngestError : public DataError {
 public:
  explicit IngestError(const std::string& msg) : DataError(msg) {}
};

// Fewer than two paired observations.
class InsufficientData : public DataError {
 public:
  explicit InsufficientData(const std::string& msg) : DataError(msg) {}
};

// A constant series makes the correlation undefined. Raised as a typed
// error so it can never leak into reports as a silent NaN.
class UndefinedCorrelation : public DataError {
 public:
  explicit UndefinedCorrelation(const std::string& msg) : DataError(msg) {}
};

// Every value of the requested feature is missing.
class NoValidValues : public DataError {
 public:
  explicit NoValidValues(const std::string& msg) : DataError(msg) {}
};

}  // namespace mirkit
