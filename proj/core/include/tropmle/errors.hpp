#ifndef TROPMLE_ERRORS_HPP
#define TROPMLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropmle {

// Base class for all library errors. `category()` is a stable machine
// readable tag; the CLI maps categories to exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& what)
        : std::runtime_error(what), category_(std::move(category)) {}
    const std::string& category() const { return category_; }

private:
    std::string category_;
};

struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& what)
        : Error("SingularMatrix", what) {}
};

struct RankDeficientError : Error {
    explicit RankDeficientError(const std::string& what)
        : Error("RankDeficient", what) {}
};

struct NotABasisError : Error {
    explicit NotABasisError(const std::string& what)
        : Error("NotABasis", what) {}
};

struct HasColoopError : Error {
    explicit HasColoopError(const std::string& what)
        : Error("HasColoop", what) {}
};

struct InvalidDataError : Error {
    explicit InvalidDataError(const std::string& what)
        : Error("InvalidData", what) {}
};

struct NotACurveError : Error {
    explicit NotACurveError(const std::string& what)
        : Error("NotACurve", what) {}
};

struct NotUniformError : Error {
    explicit NotUniformError(const std::string& what)
        : Error("NotUniform", what) {}
};

struct NotAFaceError : Error {
    explicit NotAFaceError(const std::string& what)
        : Error("NotAFace", what) {}
};

struct NoAllOnesError : Error {
    explicit NoAllOnesError(const std::string& what)
        : Error("NoAllOnes", what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what)
        : Error("ParseError", what) {}
};

} // namespace tropmle

#endif
