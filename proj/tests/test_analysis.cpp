#include <doctest.h>

#include "brsc/analysis.hpp"
#include "brsc/flats.hpp"
#include "brsc/gamma.hpp"
#include "brsc/instances.hpp"

using namespace brsc;

TEST_SUITE_BEGIN("analysis");

TEST_CASE("analyze matches the individual operations, no stage interference") {
    for (const char* name : {"chhs", "noel"}) {
        SimplicialComplex c = example_complex(name);
        AnalysisReport rep = analyze(c);

        CHECK(rep.profile.dimension == c.dim());
        CHECK(rep.boolean_representable == is_boolean_representable(c).representable);
        CHECK(rep.flat_count == static_cast<int>(all_flats(c).size()));
        REQUIRE(rep.pi1.has_value());
        CHECK(rep.pi1->rank == pi1_rank(c).rank);
        REQUIRE(rep.shellable.has_value());
        CHECK(*rep.shellable == is_shellable(c));
        REQUIRE(rep.homology.has_value());
        CHECK(rep.homology->betti == reduced_homology(c).betti);
        REQUIRE(rep.scm.has_value());
        CHECK(*rep.scm == is_sequentially_cohen_macaulay(c));
        CHECK(rep.stage_ms.count("flats") == 1);
    }
}

TEST_CASE("analyze enforces the internal consistency rules") {
    // Shellable dimension-2 fixtures carry shelling Betti numbers that must
    // match homology; analyze throws if they ever disagree.
    AnalysisReport rep = analyze(example_complex("chhs"));
    REQUIRE(rep.shelling_betti.has_value());
    CHECK(*rep.shelling_betti == rep.homology->betti);
    CHECK(*rep.shellable == *rep.scm);
}

TEST_CASE("bench harness produces ordered points and a slope") {
    BenchReport rep = bench_shellability({20, 40}, 3, 5);
    REQUIRE(rep.points.size() == 2);
    CHECK(rep.points[0].n == 20);
    CHECK(rep.points[1].n == 40);
    CHECK(rep.points[0].median_ms >= 0.0);
}

TEST_SUITE_END();
