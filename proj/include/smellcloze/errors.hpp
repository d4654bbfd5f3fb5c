#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smellcloze {

// Base of every error the library throws. Callers that only care about
// "something in the pipeline failed" catch this one.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::string path, int line, const std::string& what)
        : Error(path + ":" + std::to_string(line) + ": " + what), path_(std::move(path)), line_(line) {}

    const std::string& path() const noexcept { return path_; }
    int line() const noexcept { return line_; }

private:
    std::string path_;
    int line_;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Malformed persisted data (JSONL records, datasets, predictions).
class SchemaError : public Error {
public:
    SchemaError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    // 1-based line of the offending JSONL row, 0 when not line-oriented.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class InvalidLabel : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class TemplateError : public Error {
public:
    using Error::Error;
};

class VerbalizerError : public Error {
public:
    using Error::Error;
};

class PromptError : public Error {
public:
    using Error::Error;
};

class ScorerError : public Error {
public:
    using Error::Error;
};

class ScorerUnavailable : public ScorerError {
public:
    using ScorerError::ScorerError;
};

class MaskMissing : public ScorerError {
public:
    using ScorerError::ScorerError;
};

class EmptyCandidates : public ScorerError {
public:
    using ScorerError::ScorerError;
};

class InvalidDistribution : public ScorerError {
public:
    using ScorerError::ScorerError;
};

class UnmappedWord : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class BadFractions : public Error {
public:
    using Error::Error;
};

class SizeExceedsPool : public Error {
public:
    using Error::Error;
};

} // namespace smellcloze
