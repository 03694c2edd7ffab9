#include "brsc/analysis.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "brsc/errors.hpp"
#include "brsc/flats.hpp"
#include "brsc/gamma.hpp"
#include "brsc/instances.hpp"

namespace brsc {

namespace {

class StageTimer {
public:
    explicit StageTimer(std::map<std::string, double>& sink) : sink_(sink) {}
    template <typename F>
    auto run(const std::string& name, F&& f) {
        auto t0 = std::chrono::steady_clock::now();
        auto result = f();
        auto t1 = std::chrono::steady_clock::now();
        sink_[name] = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return result;
    }

private:
    std::map<std::string, double>& sink_;
};

}  // namespace

AnalysisReport analyze(const SimplicialComplex& c) {
    AnalysisReport rep;
    StageTimer timer(rep.stage_ms);

    rep.profile = timer.run("classify", [&] { return c.classify(); });
    rep.boolean_representable =
        timer.run("representability", [&] { return is_boolean_representable(c).representable; });
    rep.flat_count = timer.run("flats", [&] { return static_cast<int>(all_flats(c).size()); });

    if (rep.boolean_representable && rep.profile.connected)
        rep.pi1 = timer.run("pi1", [&] { return pi1_rank(c); });

    if (rep.boolean_representable) {
        ShellabilityDecision dec = timer.run("shellable", [&] { return decide_shellability(c); });
        rep.shellable = dec.shellable;
        rep.shellability_search_based = dec.search_based;
        if (dec.shellable && c.dim() <= 2) {
            auto shelling = timer.run("shelling", [&] { return find_shelling(c); });
            if (shelling) rep.shelling_betti = betti_from_shelling(c, *shelling);
        }
    }

    rep.homology = timer.run("homology", [&] { return reduced_homology(c); });
    rep.scm = timer.run("scm", [&] { return is_sequentially_cohen_macaulay(c); });

    // Internal consistency: the dimension-2 equivalences must hold.
    if (rep.shellable && c.dim() == 2 && *rep.shellable != *rep.scm)
        throw DomainError("analysis: shellability and sCM disagree in dimension 2");
    if (rep.shelling_betti && rep.homology) {
        for (size_t k = 0; k < rep.shelling_betti->size(); ++k)
            if ((*rep.shelling_betti)[k] != rep.homology->betti[k])
                throw DomainError("analysis: shelling Betti numbers disagree with homology");
    }
    return rep;
}

BenchReport bench_shellability(const std::vector<int>& sizes, int samples_per_size,
                               uint64_t seed) {
    BenchReport rep;
    for (int n : sizes) {
        std::vector<double> times;
        for (int s = 0; s < samples_per_size; ++s) {
            BoolMatrix m = random_simple_dim2_matrix(seed + static_cast<uint64_t>(s) * 7919 +
                                                         static_cast<uint64_t>(n) * 104729,
                                                     n);
            auto t0 = std::chrono::steady_clock::now();
            volatile bool result = is_shellable_matrix(m);
            (void)result;
            auto t1 = std::chrono::steady_clock::now();
            times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
        }
        std::sort(times.begin(), times.end());
        BenchPoint p;
        p.n = n;
        p.samples = samples_per_size;
        p.median_ms = times[times.size() / 2];
        rep.points.push_back(p);
    }

    // Least-squares slope of log(time) against log(n).
    if (rep.points.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int k = 0;
        for (const BenchPoint& p : rep.points) {
            if (p.median_ms <= 0) continue;
            double x = std::log(static_cast<double>(p.n));
            double y = std::log(p.median_ms);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++k;
        }
        if (k >= 2) rep.loglog_slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }
    return rep;
}

}  // namespace brsc
