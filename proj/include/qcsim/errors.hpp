#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcsim {

// Requested feature exists but cannot be applied to this input
// (e.g. circuit_unitary of a circuit containing measurements).
class unsupported_operation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// A configurable cap was exceeded (qubit cap, branch fan-out, ...).
class resource_limit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A state does not satisfy a claimed property (e.g. amplitude mass
// outside the slice selected by a measurement outcome).
class invalid_state_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Syntax or schema error in an input document. Positions are 1-based.
class parse_error : public std::runtime_error {
  public:
    parse_error(const std::string& msg, int line, int column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    explicit parse_error(const std::string& msg)
        : std::runtime_error(msg), line_(0), column_(0) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

// Circuit contains an instruction that the requested export format
// cannot represent. Carries the index of the offending top-level
// instruction.
class unsupported_export_error : public std::runtime_error {
  public:
    unsupported_export_error(const std::string& msg, std::size_t index)
        : std::runtime_error("instruction " + std::to_string(index) + ": " + msg),
          index_(index) {}

    std::size_t instruction_index() const { return index_; }

  private:
    std::size_t index_;
};

} // namespace qcsim
