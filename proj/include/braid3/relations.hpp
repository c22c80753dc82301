#pragma once

#include <string>
#include <vector>

#include "braid3/linalg.hpp"

namespace braid3 {

/// Outcome of checking the braid group presentation on a list of generator images.
struct VerificationReport {
    struct Relation {
        std::string lhs;
        std::string rhs;
        bool holds = false;
    };
    std::vector<Relation> relations;
    bool overall = true;
};

/// Checks s_i s_j = s_j s_i for |i-j| >= 2 and s_{i+1} s_i s_{i+1} = s_i s_{i+1} s_i,
/// with generators s_1..s_{n-1} mapped to images[0..n-2]. Failures are reported,
/// not thrown.
inline VerificationReport verify_relations(const std::vector<Matrix>& images) {
    VerificationReport report;
    auto name = [](std::size_t i) { return "s" + std::to_string(i + 1); };
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 2; j < images.size(); ++j) {
            bool ok = images[i] * images[j] == images[j] * images[i];
            report.relations.push_back({name(i) + "*" + name(j), name(j) + "*" + name(i), ok});
        }
        if (i + 1 < images.size()) {
            const Matrix& a = images[i];
            const Matrix& b = images[i + 1];
            bool ok = b * a * b == a * b * a;
            report.relations.push_back(
                {name(i + 1) + "*" + name(i) + "*" + name(i + 1), name(i) + "*" + name(i + 1) + "*" + name(i), ok});
        }
    }
    for (const auto& r : report.relations) report.overall = report.overall && r.holds;
    return report;
}

} // namespace braid3
