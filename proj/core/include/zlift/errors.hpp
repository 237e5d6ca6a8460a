#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace zlift {

// Base class for all zlift domain errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class NotSquare : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Thrown when a finite row stream ends before the requested row count.
class StreamExhausted : public Error {
public:
    using Error::Error;
};

// Modulus construction rejected: p not prime, or exponent < 1.
class InvalidModulus : public Error {
public:
    using Error::Error;
};

// Inverse requested of a residue sharing a factor with p.
class NotAUnit : public Error {
public:
    using Error::Error;
};

// A basis candidate with more rows than columns.
class TooManyRows : public Error {
public:
    using Error::Error;
};

// Raised by either elimination engine when a working row has no entry
// coprime to p after clearing: the input rows are not a basis mod p^nu.
class NotABasisModP : public Error {
public:
    NotABasisModP(std::size_t row, const std::string& what)
        : Error(what), row_(row) {}
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

// run_until gave up: some requested rows never stabilized within the loop
// budget.  Carries the blocking rows and the columns still lacking an
// identity row in R.
class StabilizationTimeout : public Error {
public:
    StabilizationTimeout(std::size_t loops, std::vector<std::size_t> blocking_rows,
                         std::vector<std::size_t> missing_columns, const std::string& what)
        : Error(what),
          loops_(loops),
          blocking_rows_(std::move(blocking_rows)),
          missing_columns_(std::move(missing_columns)) {}

    std::size_t loops() const { return loops_; }
    const std::vector<std::size_t>& blocking_rows() const { return blocking_rows_; }
    const std::vector<std::size_t>& missing_columns() const { return missing_columns_; }

private:
    std::size_t loops_;
    std::vector<std::size_t> blocking_rows_;
    std::vector<std::size_t> missing_columns_;
};

}  // namespace zlift
