#include "doctest.h"

#include <chrono>

#include "klrs/specht.hpp"

using namespace klrs;

// reduced version of the acceptance relation gate, kept fast for ctest
TEST_CASE("relation gate sweep, n <= 4") {
    struct Cfg {
        int e;
        std::vector<int> charge;
    };
    std::vector<Cfg> cfgs = {
        {0, {0}}, {2, {0}}, {3, {0}},
        {0, {0, 1}}, {2, {0, 1}}, {3, {0, 1}},
        {3, {0, 0, 1}}, {2, {0, 2, 0}},
    };
    int modules = 0;
    for (auto& cfg : cfgs) {
        ResidueData rd(cfg.e, cfg.charge);
        for (int n = 0; n <= 4; ++n)
            for (auto& sh : multipartitions(n, rd.level())) {
                SpechtModule M(sh, rd);
                CHECK((long long)M.dim() == count_standard_tableaux(sh));
                auto rep = M.verify_relations();
                for (auto& v : rep.violations)
                    MESSAGE("e=", cfg.e, " shape ", sh.to_string(), ": ", v.relation, " [", v.witness, "]");
                CHECK(rep.ok());
                ++modules;
            }
    }
    MESSAGE("verified ", modules, " modules");
}

TEST_CASE("timing probe: one large level-3 module") {
    auto t0 = std::chrono::steady_clock::now();
    ResidueData rd(3, {0, 0, 1});
    SpechtModule M(Multipartition({{2, 2}, {1, 1}, {}}), rd);
    auto rep = M.verify_relations();
    CHECK(rep.ok());
    auto t1 = std::chrono::steady_clock::now();
    MESSAGE("dim ", M.dim(), " verified in ",
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count(), " ms");
}
