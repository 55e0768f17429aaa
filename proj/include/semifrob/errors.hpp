#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace semifrob {

/// Domain-level failure with a stable machine-readable code.  The CLI maps
/// these to exit status 1 and prints "error: <code>: <detail>".
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Malformed input documents or flags; maps to exit status 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& detail)
        : std::runtime_error("ParseError: " + detail) {}
};

namespace errc {
inline constexpr const char* rank_mismatch = "RankMismatch";
inline constexpr const char* not_a_sublattice = "NotASublattice";
inline constexpr const char* infinite_quotient = "InfiniteQuotient";
inline constexpr const char* not_pointed = "NotPointed";
inline constexpr const char* not_full_dimensional = "NotFullDimensional";
inline constexpr const char* unknown_face = "UnknownFace";
inline constexpr const char* not_in_cone = "NotInCone";
inline constexpr const char* monotonicity_violation = "MonotonicityViolation";
inline constexpr const char* infinite_index = "InfiniteIndex";
inline constexpr const char* unknown_face_key = "UnknownFaceKey";
inline constexpr const char* duplicate_face_key = "DuplicateFaceKey";
inline constexpr const char* level_too_small = "LevelTooSmall";
inline constexpr const char* level_mismatch = "LevelMismatch";
inline constexpr const char* not_f_split = "NotFSplit";
inline constexpr const char* not_in_monoid = "NotInMonoid";
} // namespace errc

} // namespace semifrob
