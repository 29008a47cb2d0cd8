#include <chrono>
#include <cstdio>
#include <functional>

#include "nerveforge/graph.h"
#include "nerveforge/io.h"
#include "nerveforge/predicates.h"
#include "nerveforge/randgen.h"
#include "nerveforge/search.h"

using namespace nerveforge;

namespace {

double time_of(const char* label, int reps, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) body();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("  %-34s %8.3f s  (%d reps)\n", label, secs, reps);
    return secs;
}

}  // namespace

int main() {
    std::printf("chirotope: parallel tuple scan vs serial reference\n");
    for (int d : {2, 3}) {
        int n = d == 2 ? 60 : 32;
        PointSet ps = random_points(n, d, 7, RandomMode::uniform_box);
        char l1[64], l2[64];
        std::snprintf(l1, sizeof l1, "serial    n=%d d=%d", n, d);
        std::snprintf(l2, sizeof l2, "parallel  n=%d d=%d", n, d);
        Chirotope a, b;
        double ts = time_of(l1, 3, [&] { a = chirotope_serial(ps); });
        double tp = time_of(l2, 3, [&] { b = chirotope(ps); });
        std::printf("  agreement: %s, speedup %.2fx\n", a == b ? "yes" : "NO", ts / tp);
    }

    std::printf("partition scan: serial vs chunked threads (full enumeration, no hit)\n");
    BuiltinConfig cfg = builtin_config("c4-blocker-10");
    GraphSpec c4 = GraphSpec::cycle(4);
    SearchOptions serial;
    serial.prune = false;
    SearchOptions threaded = serial;
    threaded.threads = 4;
    SearchResult rs, rt;
    double ts = time_of("serial    c4-blocker-10", 3,
                        [&] { rs = is_partition_induced(cfg.points, c4, serial); });
    double tt = time_of("threads=4 c4-blocker-10", 3,
                        [&] { rt = is_partition_induced(cfg.points, c4, threaded); });
    bool agree = rs.found() == rt.found() && rs.stats.leaves == rt.stats.leaves;
    std::printf("  agreement: %s, speedup %.2fx\n", agree ? "yes" : "NO", ts / tt);
    std::printf("speedups near 1x simply mean few hardware threads are available\n");
    return 0;
}
