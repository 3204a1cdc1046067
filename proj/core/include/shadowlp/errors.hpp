#pragma once

#include <stdexcept>
#include <string>

namespace shadowlp {

// Base for all solver/library failures so callers can catch one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// linalg: pivot fell below threshold, matrix is numerically singular.
struct SingularSystem : Error {
    explicit SingularSystem(const std::string& msg = "singular linear system")
        : Error(msg) {}
};

// lp_model: malformed input text. line is 1-based, 0 if unknown.
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_ = 0)
        : Error(line_ > 0 ? "parse error at line " + std::to_string(line_) + ": " + msg
                          : "parse error: " + msg),
          line(line_) {}
};

// lp_model: header dims disagree with the data that follows.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// Subset enumeration would exceed the C(n,d) guard.
struct TooLarge : Error {
    explicit TooLarge(const std::string& msg = "subset enumeration exceeds guard")
        : Error(msg) {}
};

// shadow_vertex: start basis does not optimize the start objective.
struct NotOptimalStart : Error {
    explicit NotOptimalStart(const std::string& msg = "start basis not optimal for start objective")
        : Error(msg) {}
};

// shadow_vertex: a pivot could not be resolved (tie or singular exchange).
struct DegeneratePivot : Error {
    explicit DegeneratePivot(const std::string& msg = "degenerate pivot")
        : Error(msg) {}
};

// shadow_vertex: pivot count exceeded C(n,d)+1, walk is cycling.
struct CycleGuard : Error {
    explicit CycleGuard(const std::string& msg = "pivot limit exceeded, walk is cycling")
        : Error(msg) {}
};

// two_phase: every shortlisted basis was numerically singular.
struct AllSingular : Error {
    explicit AllSingular(const std::string& msg = "all shortlisted bases are singular")
        : Error(msg) {}
};

// two_phase: lifted right-hand side failed to be positive.
struct NonPositiveYPlus : Error {
    explicit NonPositiveYPlus(const std::string& msg = "lifted rhs not positive")
        : Error(msg) {}
};

// two_phase: no interpolation weight passed the membership check.
struct ZetaSearchFailed : Error {
    explicit ZetaSearchFailed(const std::string& msg = "zeta search failed")
        : Error(msg) {}
};

// shadow_census: a cone boundary coincidence prevents an exact answer.
struct DegenerateCone : Error {
    explicit DegenerateCone(const std::string& msg = "cone boundary coincidence")
        : Error(msg) {}
};

// brute force oracle: vertex-free feasible region, cannot certify status.
struct UnresolvedDegenerate : Error {
    explicit UnresolvedDegenerate(const std::string& msg = "cannot certify status of degenerate instance")
        : Error(msg) {}
};

// bounds: formula arguments outside the supported domain.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

}  // namespace shadowlp
