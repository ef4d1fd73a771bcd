#include "doctest.h"

#include "skewcode/examples.hpp"
#include "skewcode/oracle.hpp"

using namespace skewcode;

TEST_CASE("every bundled example passes its golden checks") {
    auto results = gallery::run_all();
    REQUIRE(results.size() == 8);
    for (const auto& res : results) {
        INFO(res.name << ": " << res.detail);
        CHECK(res.passed);
    }
    CHECK(results.front().name == "example-1");
    CHECK(results.back().name == "example-8");
}

TEST_CASE("gallery code builders expose the advertised instances") {
    auto c4 = gallery::example4_code();
    CHECK(c4.length() == 4);
    CHECK(c4.rank() == 3);
    CHECK(c4.ctx()->r->signature() == "prod[zmod:3]");
    CHECK(enumerate_code(c4).size() == 729);

    auto c5 = gallery::example5b_code();
    CHECK(c5.length() == 4);
    CHECK(c5.rank() == 2);
    CHECK(c5.ctx()->r->signature() == "dual[zmod:6]");
    CHECK(enumerate_code(c5).size() == 1296);

    auto c6 = gallery::example6_code();
    CHECK(c6.self_dual_criterion().is_self_dual());
    CHECK(enumerate_code(c6).size() == 81);

    auto c7 = gallery::example7_code();
    CHECK(c7.length() == 3);
    CHECK_FALSE(c7.ctx()->delta_zero);

    auto c1 = gallery::example1_code(gallery::dual_project_nilpart(ring::zmod(5)));
    CHECK(c1.length() == 4);
    CHECK(c1.rank() == 3);
    CHECK(c1.ctx()->r->signature() == "dual[zmod:5]");
}
