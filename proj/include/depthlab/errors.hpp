#ifndef DEPTHLAB_ERRORS_HPP
#define DEPTHLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace depthlab {

// Mismatched moduli, arities, ring contexts, malformed values.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// A check was asked to run under hypotheses it cannot certify
// (non-CM ring for a CM-only theorem, missing certificate, uncertified sup).
// CLI maps this to exit code 3.
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

// Homology requested outside the trusted window of a truncated complex.
class WindowError : public std::runtime_error {
public:
    explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

// Description-file syntax errors carry line/column. CLI maps this to exit 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int col)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ": " + what),
          line(line), col(col) {}
    int line;
    int col;
};

} // namespace depthlab

#endif
