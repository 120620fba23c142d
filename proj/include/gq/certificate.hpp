#pragma once

#include "gq/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gq {

/// Structured outcome of a verification: {check, status, witness?, residual?}.
/// Residuals are carried in canonical polynomial text.
struct Certificate {
    std::string check;
    bool pass = true;
    std::string witness;                 // what failed (generator, epsilon, ...)
    std::optional<std::string> residual; // canonical form of the nonzero defect

    static Certificate ok(std::string check) { return {std::move(check), true, "", std::nullopt}; }
    static Certificate failed(std::string check, std::string witness, const GradedPolynomial& residual) {
        return {std::move(check), false, std::move(witness), residual.str()};
    }

    std::string str() const {
        std::string s = (pass ? "PASS " : "FAIL ") + check;
        if (!pass) {
            if (!witness.empty()) s += "  witness: " + witness;
            if (residual) s += "  residual: " + *residual;
        }
        return s;
    }
};

} // namespace gq
