#pragma once

#include <stdexcept>
#include <string>

namespace tslasso {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// The (subset) Gram matrix is rank-deficient, i.e. some predictors are collinear.
class SingularDesign : public Error {
public:
    using Error::Error;
};

class MissingTruth : public Error {
public:
    MissingTruth() : Error("dataset carries no truth labels") {}
};

class DomainError : public Error {
public:
    using Error::Error;
};

class EmptyWindow : public Error {
public:
    EmptyWindow() : Error("forecast window is empty") {}
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class AllCandidatesFailed : public Error {
public:
    using Error::Error;
};

class SeriesTooShort : public Error {
public:
    using Error::Error;
};

// Panel ingestion errors name the offending column or row.
class MissingColumn : public Error {
public:
    explicit MissingColumn(std::string column)
        : Error("missing column: " + column), column_(std::move(column)) {}
    const std::string& column() const noexcept { return column_; }

private:
    std::string column_;
};

class NonMonotoneDates : public Error {
public:
    using Error::Error;
};

class NonFiniteValue : public Error {
public:
    using Error::Error;
};

}  // namespace tslasso
