#pragma once

#include <stdexcept>
#include <string>

namespace minkarr {

// Malformed or out-of-contract input: bad JSON, dimension mismatch,
// non-positive ratio, unknown flags. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// The input is well-formed but violates a mathematical hypothesis the
// operation requires (HellyEmpty, DegeneratePair, PackingInvalid, ...).
// Maps to CLI exit code 1: the math said no, and we can name the reason.
class CheckError : public std::runtime_error {
public:
    CheckError(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// A certified inequality failed to re-verify. Must not happen on any input;
// indicates a bug in the builder, not in the data.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline CheckError helly_empty(const std::string& msg) { return {"HellyEmpty", msg}; }
inline CheckError degenerate_pair(const std::string& msg) { return {"DegeneratePair", msg}; }
inline CheckError zero_width_slab(const std::string& msg) { return {"ZeroWidthSlab", msg}; }
inline CheckError hull_contains_origin(const std::string& msg) { return {"HullContainsOrigin", msg}; }
inline CheckError eq1_violated(const std::string& msg) { return {"Eq1Violated", msg}; }
inline CheckError packing_invalid(const std::string& msg) { return {"PackingInvalid", msg}; }
inline CheckError precondition_violated(const std::string& msg) { return {"PreconditionViolated", msg}; }
inline CheckError hypothesis_violated(const std::string& msg) { return {"HypothesisViolated", msg}; }
inline CheckError strictness_violation(const std::string& msg) { return {"StrictnessViolation", msg}; }
inline CheckError search_exhausted(const std::string& msg) { return {"SearchExhausted", msg}; }
inline CheckError pool_too_large(const std::string& msg) { return {"PoolTooLarge", msg}; }

}  // namespace minkarr
