#pragma once

#include <stdexcept>
#include <string>

namespace evtol {

enum class ErrorKind {
    Parameter,
    Domain,
    InfeasibleMission,
    InfeasibleMassBudget,
    Contract,
    Data,
    Parse,
    Validation,
    Config,
    Io,
};

/// Base for every error the library raises. `kind()` lets callers (the CLI in
/// particular) map failures onto exit codes without a catch ladder.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// A physical parameter violated its invariant. `field()` names the offender.
class ParameterError : public Error {
public:
    ParameterError(std::string field, const std::string& what)
        : Error(ErrorKind::Parameter, what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class InfeasibleMissionError : public Error {
public:
    InfeasibleMissionError(double min_range_mi, const std::string& what)
        : Error(ErrorKind::InfeasibleMission, what), min_range_mi_(min_range_mi) {}
    double min_feasible_range_mi() const noexcept { return min_range_mi_; }

private:
    double min_range_mi_;
};

class InfeasibleMassBudgetError : public Error {
public:
    InfeasibleMassBudgetError(double shortfall_kg, const std::string& what)
        : Error(ErrorKind::InfeasibleMassBudget, what), shortfall_kg_(shortfall_kg) {}
    double shortfall_kg() const noexcept { return shortfall_kg_; }

private:
    double shortfall_kg_;
};

class ContractError : public Error {
public:
    explicit ContractError(const std::string& what) : Error(ErrorKind::Contract, what) {}
};

class DataError : public Error {
public:
    explicit DataError(const std::string& what) : Error(ErrorKind::Data, what) {}
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error(ErrorKind::Parse, what), line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& what)
        : Error(ErrorKind::Validation, what), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(ErrorKind::Config, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

} // namespace evtol
