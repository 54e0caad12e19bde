// Error taxonomy for the binlsq library. Each class maps to one of the
// CLI exit codes documented in the README.
#pragma once

#include <stdexcept>
#include <string>

namespace binlsq {

// Root of all binlsq errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (CSV matrices, JSON configs).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Operand shapes do not conform (matvec, matmul, solve).
class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Problem invariants violated (m <= n, length mismatch, non-finite data).
class InvalidProblem : public Error {
public:
    explicit InvalidProblem(const std::string& what) : Error(what) {}
};

// A matrix that must have full column rank does not, at the configured
// threshold. Carries the offending pivot magnitude and the largest one
// so callers can report how close the matrix is to deficiency.
class RankDeficient : public Error {
public:
    RankDeficient(const std::string& what, double offending_pivot, double largest_pivot)
        : Error(what), offending_pivot_(offending_pivot), largest_pivot_(largest_pivot) {}

    double offending_pivot() const noexcept { return offending_pivot_; }
    double largest_pivot() const noexcept { return largest_pivot_; }

private:
    double offending_pivot_;
    double largest_pivot_;
};

// Exhaustive enumeration refused: 2^n candidates exceed the configured cap.
class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& what) : Error(what) {}
};

// Invalid generator or benchmark specification.
class SpecError : public Error {
public:
    explicit SpecError(const std::string& what) : Error(what) {}
};

// A sampled column is identically zero and cannot be normalized.
class DegenerateColumn : public SpecError {
public:
    explicit DegenerateColumn(const std::string& what) : SpecError(what) {}
};

}  // namespace binlsq
