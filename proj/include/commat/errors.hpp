#ifndef COMMAT_ERRORS_HPP
#define COMMAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace commat {

/// Requested enumeration exceeds the configured work budget; no partial
/// result is produced.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// An evaluation point is too close to a pole of the product for the
/// requested precision to be certifiable.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal identity that must hold exactly (integrality of a count,
/// realness of a coefficient) was violated. Always indicates a bug.
class InconsistencyError : public std::logic_error {
public:
    explicit InconsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace commat

#endif
