#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brsc/homology.hpp"
#include "brsc/homotopy.hpp"
#include "brsc/shelling.hpp"
#include "brsc/simplicial_complex.hpp"

namespace brsc {

/// Aggregate of the per-subcommand results for one complex, with timings.
struct AnalysisReport {
    ComplexProfile profile;
    bool boolean_representable = false;
    int flat_count = 0;
    std::optional<Pi1Report> pi1;                     // connected BR complexes
    std::optional<bool> shellable;
    bool shellability_search_based = false;
    std::optional<HomologyReport> homology;
    std::optional<std::vector<long long>> shelling_betti;  // when shellable
    std::optional<bool> scm;
    std::map<std::string, double> stage_ms;
};

AnalysisReport analyze(const SimplicialComplex& c);

struct BenchPoint {
    int n = 0;
    double median_ms = 0.0;
    int samples = 0;
};

struct BenchReport {
    std::vector<BenchPoint> points;
    double loglog_slope = 0.0;
};

/// Times the matrix-level shellability decision on random simple dimension-2
/// instances across the given sizes and fits a log-log slope.
BenchReport bench_shellability(const std::vector<int>& sizes, int samples_per_size,
                               uint64_t seed);

}  // namespace brsc
