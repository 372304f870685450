#pragma once

#include <vector>

#include "matnorm/linalg.hpp"

namespace matnorm {

enum class MomentMethod { closed_form, polarization, monte_carlo };

inline const char* to_string(MomentMethod m) {
    switch (m) {
        case MomentMethod::closed_form: return "closed-form";
        case MomentMethod::polarization: return "polarization";
        case MomentMethod::monte_carlo: return "monte-carlo";
    }
    return "?";
}

/// Scalar result of a sphere moment, tagged with how it was obtained.
struct MomentValue {
    Complex value{};
    std::vector<int> order;   // matrix multiplicities, e.g. {1,1,1,1}
    MomentMethod method = MomentMethod::closed_form;
    double stderr_est = 0;    // meaningful only for monte-carlo
};

} // namespace matnorm
