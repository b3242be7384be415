#pragma once

#include <stdexcept>
#include <string>

namespace locreg {

// Base class for all library errors. kind() gives a stable machine-readable tag.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* kind() const { return "Error"; }
};

struct NonzeroConstantTerm : Error {
    using Error::Error;
    const char* kind() const override { return "NonzeroConstantTerm"; }
};

struct DuplicateVariable : Error {
    using Error::Error;
    const char* kind() const override { return "DuplicateVariable"; }
};

struct ArityMismatch : Error {
    using Error::Error;
    const char* kind() const override { return "ArityMismatch"; }
};

// An image polynomial with nonzero constant term cannot define a local map.
struct NonlocalImage : Error {
    using Error::Error;
    const char* kind() const override { return "NonlocalImage"; }
};

// Raised by make_map when a source relation fails ideal membership in the
// target at the requested truncation degree.
struct NotWellDefined : Error {
    NotWellDefined(const std::string& msg, int degree, int relation_index)
        : Error(msg), degree(degree), relation_index(relation_index) {}
    const char* kind() const override { return "NotWellDefinedAtDegree"; }
    int degree;
    int relation_index;
};

struct NotEliminable : Error {
    using Error::Error;
    const char* kind() const override { return "NotEliminable"; }
};

struct CompositionMismatch : Error {
    using Error::Error;
    const char* kind() const override { return "CompositionMismatch"; }
};

struct NonCommutative : Error {
    using Error::Error;
    const char* kind() const override { return "NonCommutative"; }
};

struct ShapeMismatch : Error {
    using Error::Error;
    const char* kind() const override { return "ShapeMismatch"; }
};

struct GenerationExhausted : Error {
    using Error::Error;
    const char* kind() const override { return "GenerationExhausted"; }
};

// Two independent computation routes disagreed. Always a bug, never user error.
struct InternalInconsistency : Error {
    using Error::Error;
    const char* kind() const override { return "InternalInconsistency"; }
};

struct InvalidField : Error {
    using Error::Error;
    const char* kind() const override { return "InvalidField"; }
};

}  // namespace locreg
