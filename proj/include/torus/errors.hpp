#pragma once

#include <stdexcept>
#include <string>

namespace torus {

// Base for all library errors. CLI maps these to exit code 2 (validation)
// or 3 (numeric), see tools/torus_localize.cpp.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularBasis : Error {
    explicit SingularBasis(const std::string& m = "basis matrix is singular") : Error(m) {}
};
struct ZeroVector : Error {
    explicit ZeroVector(const std::string& m = "zero vector has no direction") : Error(m) {}
};
struct NotPositiveDefinite : Error {
    explicit NotPositiveDefinite(const std::string& m = "form is not positive definite") : Error(m) {}
};
struct CrossRadicalProduct : Error {
    explicit CrossRadicalProduct(const std::string& m) : Error(m) {}
};
struct ApproximateAmbiguity : Error {
    explicit ApproximateAmbiguity(const std::string& m) : Error(m) {}
};
struct FloatModeUnsupported : Error {
    explicit FloatModeUnsupported(const std::string& m = "operation requires an exact scalar field") : Error(m) {}
};
struct NotIntegerForm : Error {
    explicit NotIntegerForm(const std::string& m = "form does not have integer coefficients") : Error(m) {}
};
struct LevelTooLarge : Error {
    explicit LevelTooLarge(const std::string& m) : Error(m) {}
};
struct NotBinary : Error {
    explicit NotBinary(const std::string& m = "operation requires a binary (d=2) form") : Error(m) {}
};
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& m) : Error(m) {}
};
struct NoRepresentations : Error {
    explicit NoRepresentations(const std::string& m) : Error(m) {}
};
struct UnfactoredInput : Error {
    explicit UnfactoredInput(const std::string& m = "input integer is not fully factored") : Error(m) {}
};
struct HalfIntegerMatrix : Error {
    explicit HalfIntegerMatrix(const std::string& m) : Error(m) {}
};
struct EmptyStratum : Error {
    explicit EmptyStratum(const std::string& m) : Error(m) {}
};
struct EmptyWindow : Error {
    explicit EmptyWindow(const std::string& m) : Error(m) {}
};
struct DecompositionMissing : Error {
    explicit DecompositionMissing(const std::string& m = "no form decomposition was supplied") : Error(m) {}
};
struct OutOfDomain : Error {
    explicit OutOfDomain(const std::string& m) : Error(m) {}
};
struct ResolutionTooCoarse : Error {
    explicit ResolutionTooCoarse(const std::string& m) : Error(m) {}
};
struct DegenerateField : Error {
    explicit DegenerateField(const std::string& m = "field is numerically zero everywhere") : Error(m) {}
};
struct ConfigParse : Error {
    int line = 0;
    int column = 0;
    ConfigParse(const std::string& m, int ln, int col)
        : Error(m + " (line " + std::to_string(ln) + ", column " + std::to_string(col) + ")"),
          line(ln), column(col) {}
};
struct UnknownCommand : Error {
    explicit UnknownCommand(const std::string& m) : Error(m) {}
};

} // namespace torus
