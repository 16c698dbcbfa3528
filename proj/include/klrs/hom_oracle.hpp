#pragma once

#include <optional>

#include "klrs/specht.hpp"

namespace klrs {

// Brute-force graded hom-space computation: solve the intertwiner equations
// rho_tgt(g) F = F rho_src(g) over all KLR generators, degree block by
// degree block, with exact linear algebra.

struct IntertwinerSpace {
    Multipartition source, target;
    std::map<long long, int> degree_dims;                      // d -> dim
    std::map<long long, std::vector<ExactMatrix>> bases;       // d -> basis maps
    int total_dim() const {
        int s = 0;
        for (auto& [d, k] : degree_dims) s += k;
        return s;
    }
};

struct OracleOptions {
    std::optional<std::vector<long long>> degrees;  // default: all plausible
    long long prime = 0;                            // 0 = rationals
    bool with_bases = true;
    int jobs = 1;
};

IntertwinerSpace intertwiner_space(const SpechtModule& src, const SpechtModule& tgt,
                                   const OracleOptions& opts = {});

// Direct check that F intertwines every generator action; on failure names
// the violated generator in *violated when given.
bool is_intertwiner(const SpechtModule& src, const SpechtModule& tgt, const ExactMatrix& F,
                    std::string* violated = nullptr);

// F lies in the span of the degree-d solution basis (rank test over Q).
bool in_intertwiner_span(const IntertwinerSpace& space, long long degree, const ExactMatrix& F);

}  // namespace klrs
