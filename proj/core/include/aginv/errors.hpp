#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "aginv/numeric.hpp"

namespace aginv {

// Structural constraint failures on descriptors. Every violated field is
// collected before throwing so callers can report them all at once.
class ValidationError : public std::runtime_error {
public:
    struct Violation {
        std::string field;
        std::string message;
    };

    explicit ValidationError(std::vector<Violation> violations)
        : std::runtime_error(format(violations)), violations_(std::move(violations)) {}

    const std::vector<Violation>& violations() const { return violations_; }

private:
    static std::string format(const std::vector<Violation>& violations) {
        std::string out = "invalid descriptor:";
        for (const auto& v : violations) out += "\n  " + v.field + ": " + v.message;
        return out;
    }

    std::vector<Violation> violations_;
};

// Raised when a level n shares a factor with the characteristic p. Nothing
// here is meaningful at such levels: already the additive group in
// characteristic p has wild p-covers, so every formula assumes gcd(n, p) = 1.
class CoprimalityError : public std::runtime_error {
public:
    CoprimalityError(Int n, Int p)
        : std::runtime_error("n = " + n.get_str() + " is not coprime to the characteristic p = " +
                             p.get_str()),
          n_(std::move(n)),
          p_(std::move(p)) {}

    const Int& n() const { return n_; }
    const Int& p() const { return p_; }

private:
    Int n_;
    Int p_;
};

}  // namespace aginv
