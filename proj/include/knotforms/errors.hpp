#pragma once

#include <stdexcept>
#include <string>

namespace knotforms {

// Base class for every domain error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("zero polynomial has no unit normalization") {}
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("zero denominator") {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown catalog name: " + name) {}
};

struct NotUnimodular : Error {
    NotUnimodular() : Error("congruence matrix must have determinant +1 or -1") {}
};

struct SizeMismatch : Error {
    explicit SizeMismatch(const std::string& what) : Error("size mismatch: " + what) {}
};

struct InvalidSeifertMatrix : Error {
    explicit InvalidSeifertMatrix(const std::string& what) : Error("invalid Seifert matrix: " + what) {}
};

struct SingularPresentation : Error {
    SingularPresentation() : Error("presentation matrix is singular (not a torsion module)") {}
};

struct AtUnity : Error {
    AtUnity() : Error("Levine-Tristram signature is undefined at omega = 1") {}
};

struct AtRoot : Error {
    AtRoot() : Error("Levine-Tristram signature is undefined where the Alexander polynomial vanishes") {}
};

struct NotSymmetric : Error {
    NotSymmetric() : Error("polynomial is not symmetric under t -> 1/t up to a unit") {}
};

struct RankMismatch : Error {
    explicit RankMismatch(const std::string& what) : Error("free-group rank mismatch: " + what) {}
};

struct VerificationFailed : Error {
    explicit VerificationFailed(const std::string& what) : Error("verification failed: " + what) {}
};

struct NotFibered : Error {
    NotFibered() : Error("base knot must be fibered and nontrivial (fiber rank >= 2)") {}
};

struct InvalidEta : Error {
    explicit InvalidEta(const std::string& what) : Error("invalid infection curve: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace knotforms
