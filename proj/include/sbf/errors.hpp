#pragma once

#include <stdexcept>
#include <string>

namespace sbfint {

struct PoleAtNonpositiveInteger : std::domain_error {
    explicit PoleAtNonpositiveInteger(const std::string& m) : std::domain_error(m) {}
};
struct ParameterDegenerate : std::domain_error {
    explicit ParameterDegenerate(const std::string& m) : std::domain_error(m) {}
};
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& m) : std::runtime_error(m) {}
};
struct DiagonalPoint : std::domain_error {
    explicit DiagonalPoint(const std::string& m) : std::domain_error(m) {}
};
struct HypergeometricDivergesAtUnity : std::domain_error {
    explicit HypergeometricDivergesAtUnity(const std::string& m) : std::domain_error(m) {}
};
struct BaseOutOfValidity : std::domain_error {
    explicit BaseOutOfValidity(const std::string& m) : std::domain_error(m) {}
};
struct OddSumUnsupported : std::domain_error {
    explicit OddSumUnsupported(const std::string& m) : std::domain_error(m) {}
};
struct NonTriangularOrders : std::domain_error {
    explicit NonTriangularOrders(const std::string& m) : std::domain_error(m) {}
};

}  // namespace sbfint
