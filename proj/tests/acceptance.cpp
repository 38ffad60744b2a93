// Acceptance suite: replays every certified bound at the stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <iostream>
#include <sstream>
#include <vector>

#include "swhist/swhist.hpp"

using namespace swhist;
using namespace swhist::oracle;

namespace {

struct outcome {
    bool pass = true;
    std::size_t checks = 0;
    std::size_t violations = 0;
    std::string note;

    void merge(const outcome& other) {
        pass = pass && other.pass;
        checks += other.checks;
        violations += other.violations;
        if (note.empty()) note = other.note;
    }
};

std::vector<edge> concat(std::vector<edge> a, const std::vector<edge>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<edge> shift_ids(std::vector<edge> edges, vertex_id offset) {
    for (edge& e : edges) e = edge(e.u + offset, e.v + offset);
    return edges;
}

// ---------------------------------------------------------------- criterion 1
// Subadditivity f(AB) <= f(A)+f(B): 10,000 random two-way splits per
// function, for m, VC and E*_alpha with alpha in {1,2,3}.
outcome criterion_subadditivity() {
    // Pool for m and E*: includes dense single-component unions.
    std::vector<std::vector<edge>> pool;
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        pool.push_back(gen_forest(60, 55, seed).edges);
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        pool.push_back(gen_alpha_union(40, 3, 110, 10 + seed).stream.edges);
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        pool.push_back(gen_gnp(26, 0.35, 20 + seed).edges);
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        pool.push_back(concat(gen_forest(60, 59, 30 + seed).edges,
                              concat(gen_gnp(24, 0.55, 40 + seed).edges,
                                     gen_alpha_union(50, 2, 90, 50 + seed).stream.edges)));

    // Pool for VC: same envelope (n <= 60, length <= 400) with mixes laid on
    // disjoint id ranges so window covers stay within the oracle's depth cap.
    std::vector<std::vector<edge>> vc_pool;
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        vc_pool.push_back(gen_forest(60, 55, 60 + seed).edges);
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        vc_pool.push_back(gen_alpha_union(40, 2, 60, 70 + seed).stream.edges);
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        vc_pool.push_back(gen_gnp(26, 0.3, 80 + seed).edges);
    // disjoint id blocks keep full-stream covers provably at most 12+13+9+5
    for (std::uint64_t seed = 1; seed <= 4; ++seed)
        vc_pool.push_back(concat(
            gen_forest(24, 23, 90 + seed).edges,
            concat(shift_ids(gen_gnp(14, 0.35, 90 + seed).edges, 24),
                   concat(shift_ids(gen_alpha_union(10, 2, 11, 90 + seed).stream.edges, 38),
                          shift_ids(gen_forest(10, 7, 94 + seed).edges, 48)))));

    struct task {
        std::string name;
        segment_fn fn;
        const std::vector<edge>* stream;
        std::uint64_t seed;
    };
    std::vector<task> tasks;
    const std::size_t splits_per_stream = 10000 / pool.size() + 1;
    for (std::size_t si = 0; si < pool.size(); ++si) {
        tasks.push_back({"m", matching_size_fn(), &pool[si], 900 + si});
        tasks.push_back({"VC", vertex_cover_size_fn(), &vc_pool[si], 900 + si});
        for (std::uint32_t alpha : {1u, 2u, 3u})
            tasks.push_back({"E*_" + std::to_string(alpha), e_star_fn(alpha), &pool[si], 900 + si});
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        outcome out;
        for (std::size_t ti = next++; ti < tasks.size(); ti = next++) {
            const task& t = tasks[ti];
            auto violations = check_subadditive(t.fn, *t.stream, splits_per_stream, t.seed);
            out.checks += splits_per_stream + 1;
            out.violations += violations.size();
            if (!violations.empty() && out.note.empty())
                out.note = "violation for f=" + t.name + ": " + violations.front().witness;
        }
        return out;
    };
    std::vector<std::future<outcome>> futures;
    for (int i = 0; i < 8; ++i) futures.push_back(std::async(std::launch::async, worker));
    outcome total;
    for (auto& f : futures) total.merge(f.get());
    total.pass = total.violations == 0;
    return total;
}

// ---------------------------------------------------------------- criterion 2
// Almost-smoothness ratio form with d=2 for m, VC, E*_alpha and (c,d)=(2,2)
// for the greedy size, 5,000 three-way splits each; plus tightness: d=1.9 on
// the 3-path construction must produce a violation.
outcome criterion_almost_smooth() {
    std::vector<std::vector<edge>> pool;
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        pool.push_back(gen_forest(40, 36, 100 + seed).edges);
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        pool.push_back(gen_alpha_union(30, 2, 56, 110 + seed).stream.edges);
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        pool.push_back(gen_gnp(22, 0.3, 120 + seed).edges);
    pool.push_back(gen_three_paths(12).stream.edges);

    struct task {
        std::string name;
        segment_fn fn;
        smooth_params params;
    };
    std::vector<task> tasks;
    tasks.push_back({"m", matching_size_fn(), {1.0, 2.0}});
    tasks.push_back({"VC", vertex_cover_size_fn(), {1.0, 2.0}});
    for (std::uint32_t alpha : {1u, 2u, 3u})
        tasks.push_back({"E*_" + std::to_string(alpha), e_star_fn(alpha), {1.0, 2.0}});
    tasks.push_back({"greedy", greedy_matching_size_fn(), {2.0, 2.0}});

    const std::size_t splits_per_stream = 5000 / pool.size() + 1;
    std::vector<std::future<outcome>> futures;
    for (std::size_t si = 0; si < pool.size(); ++si) {
        futures.push_back(std::async(std::launch::async, [&, si] {
            outcome out;
            for (const auto& t : tasks) {
                auto violations =
                    check_almost_smooth(t.fn, t.params, pool[si], splits_per_stream, 700 + si);
                out.checks += splits_per_stream + 1;
                out.violations += violations.size();
                if (!violations.empty() && out.note.empty())
                    out.note = "violation for f=" + t.name + ": " + violations.front().witness;
            }
            return out;
        }));
    }
    outcome total;
    for (auto& f : futures) total.merge(f.get());
    total.pass = total.violations == 0;

    // tightness: d=1.9 must fail on the 3-path family (m(ABC)=2n)
    auto tp = gen_three_paths(20);
    auto tight = check_almost_smooth(matching_size_fn(), {1.0, 1.9}, tp.stream.edges, 100, 3);
    ++total.checks;
    if (tight.empty()) {
        total.pass = false;
        total.note = "tightness split with d=1.9 was not detected";
    }
    return total;
}

// ---------------------------------------------------------------- criterion 3
// Exact-estimator histogram (c=1, d=2, C=1): for every query time,
// m(W) <= output <= 2 (1+e)^2/(1-e)^2 m(W), exact inequality.
outcome criterion_framework_exact() {
    const double epsilons[] = {0.05, 0.1, 0.25};
    std::vector<std::future<outcome>> futures;
    for (int chunk = 0; chunk < 8; ++chunk) {
        futures.push_back(std::async(std::launch::async, [chunk, &epsilons] {
            outcome out;
            for (int i = 0; i < 25; ++i) {
                const std::uint64_t seed = 1000 + chunk * 25 + i;
                std::vector<edge> stream;
                switch (seed % 3) {
                    case 0: stream = gen_forest(24, 21, seed).edges; break;
                    case 1: stream = gen_alpha_union(20, 2, 34, seed).stream.edges; break;
                    default: stream = gen_gnp(16, 0.28, seed).edges; break;
                }
                // revisit edges after expiry so B1 drifts past the window
                stream = concat(stream, gen_forest(24, 20, seed + 7000).edges);
                const double eps = epsilons[seed % 3];
                const std::uint64_t w = (seed % 2) ? 12 : 25;
                const double ceiling = 2.0 * (1 + eps) * (1 + eps) / ((1 - eps) * (1 - eps));
                sliding_histogram<exact_match_estimator> hist({eps, w, 1.0, 2.0, 1.0});
                for (std::size_t t = 1; t <= stream.size(); ++t) {
                    hist.update(stream[t - 1]);
                    const double truth = window_truth(stream, w, t, window_problem::matching);
                    const double q = hist.query();
                    ++out.checks;
                    if (!(q >= truth && q <= ceiling * truth)) {
                        ++out.violations;
                        if (out.note.empty()) {
                            std::ostringstream os;
                            os << "seed " << seed << " t " << t << " q " << q << " m(W) " << truth;
                            out.note = os.str();
                        }
                    }
                }
            }
            return out;
        }));
    }
    outcome total;
    for (auto& f : futures) total.merge(f.get());
    total.pass = total.violations == 0;
    return total;
}

// ---------------------------------------------------------------- criterion 4
// mm_via_goodedges on arboricity-alpha streams, >= 50,000 query points:
// m(W) <= output <= 2(alpha+2)(1+e)^2/(1-e)^2 m(W).
outcome criterion_mm_sw() {
    struct job {
        std::uint32_t alpha;
        std::uint64_t seed;
        double eps;
    };
    std::vector<job> jobs;
    for (std::uint64_t s = 1; s <= 90; ++s) jobs.push_back({1, s, (s % 2) ? 0.1 : 0.25});
    for (std::uint64_t s = 1; s <= 90; ++s) jobs.push_back({2, 200 + s, (s % 2) ? 0.1 : 0.25});
    for (std::uint64_t s = 1; s <= 90; ++s) jobs.push_back({3, 400 + s, (s % 2) ? 0.1 : 0.25});

    const unsigned workers = 8;
    std::vector<std::future<outcome>> futures;
    for (unsigned wk = 0; wk < workers; ++wk) {
        futures.push_back(std::async(std::launch::async, [&jobs, wk, workers] {
            outcome out;
            for (std::size_t ji = wk; ji < jobs.size(); ji += workers) {
                const job& j = jobs[ji];
                std::vector<edge> stream;
                switch (j.alpha) {
                    case 1: stream = gen_forest(200, 199, j.seed).edges; break;
                    case 2: stream = gen_alpha_union(100, 2, 190, j.seed).stream.edges; break;
                    default: stream = gen_alpha_union(80, 3, 200, j.seed).stream.edges; break;
                }
                const std::uint64_t w = 60;
                algo_spec spec{window_algo::mm_via_goodedges, j.alpha, j.eps, w};
                mm_goodedges_window alg(spec);
                const double bound = upper_ratio_bound(spec);
                for (std::size_t t = 1; t <= stream.size(); ++t) {
                    alg.update(stream[t - 1]);
                    const double truth = window_truth(stream, w, t, window_problem::matching);
                    const double q = alg.estimate();
                    ++out.checks;
                    if (!(q >= truth && q <= bound * truth)) {
                        ++out.violations;
                        if (out.note.empty()) {
                            std::ostringstream os;
                            os << "alpha " << j.alpha << " seed " << j.seed << " t " << t << " q "
                               << q << " m(W) " << truth;
                            out.note = os.str();
                        }
                    }
                }
            }
            return out;
        }));
    }
    outcome total;
    for (auto& f : futures) total.merge(f.get());
    total.pass = total.violations == 0 && total.checks >= 50000;
    if (total.checks < 50000) total.note = "fewer than 50000 query points";
    return total;
}

// ---------------------------------------------------------------- criterion 5
// vc_approx, >= 20,000 query points with eps in {0.05, 0.1}: the reported
// set covers the window, its size is at most 4(1+2e) VC(W), and whenever the
// query leaves B1, 2 m-hat(B2) >= (1-e) m-hat(B1).
outcome criterion_sw_vc() {
    struct job {
        std::vector<edge> stream;
        std::uint64_t w;
        double eps;
    };
    std::vector<job> jobs;
    for (std::uint64_t s = 1; s <= 240; ++s) {
        const double eps = (s % 2) ? 0.05 : 0.1;
        switch (s % 4) {
            case 0: jobs.push_back({gen_three_paths(15).stream.edges, 30, eps}); break;
            case 1: jobs.push_back({gen_forest(90, 89, 600 + s).edges, 40, eps}); break;
            case 2: jobs.push_back({gen_gnp(36, 0.15, 900 + s).edges, 45, eps}); break;
            default: jobs.push_back({gen_gnp(30, 0.3, 1200 + s).edges, 40, eps}); break;
        }
    }
    const unsigned workers = 8;
    std::vector<std::future<outcome>> futures;
    for (unsigned wk = 0; wk < workers; ++wk) {
        futures.push_back(std::async(std::launch::async, [&jobs, wk, workers] {
            outcome out;
            for (std::size_t ji = wk; ji < jobs.size(); ji += workers) {
                const job& j = jobs[ji];
                algo_spec spec{window_algo::vc_approx, 1, j.eps, j.w};
                vc_approx_window alg(spec);
                const double bound = 4.0 * (1.0 + 2.0 * j.eps);
                for (std::size_t t = 1; t <= j.stream.size(); ++t) {
                    alg.update(j.stream[t - 1]);
                    const double vc = window_truth(j.stream, j.w, t, window_problem::vertex_cover);
                    auto cover = alg.cover();
                    std::unordered_set<vertex_id> in(cover.vertices.begin(), cover.vertices.end());
                    bool covers = true;
                    const std::uint64_t len = std::min<std::uint64_t>(j.w, t);
                    for (std::uint64_t i = t - len; i < t; ++i) {
                        const edge& e = j.stream[std::size_t(i)];
                        if (!in.count(e.u) && !in.count(e.v)) covers = false;
                    }
                    bool carryover = true;
                    if (alg.used_second_bucket())
                        carryover = 2.0 * alg.second_bucket_matching() >=
                                    (1.0 - j.eps) * alg.first_bucket_matching();
                    ++out.checks;
                    if (!covers || !(alg.estimate() <= bound * vc) || !carryover) {
                        ++out.violations;
                        if (out.note.empty()) {
                            std::ostringstream os;
                            os << "t " << t << " size " << alg.estimate() << " VC(W) " << vc
                               << (covers ? "" : " cover-invalid")
                               << (carryover ? "" : " carryover-failed");
                            out.note = os.str();
                        }
                    }
                }
            }
            return out;
        }));
    }
    outcome total;
    for (auto& f : futures) total.merge(f.get());
    total.pass = total.violations == 0 && total.checks >= 20000;
    if (total.checks < 20000) total.note = "fewer than 20000 query points";
    return total;
}

// ---------------------------------------------------------------- criterion 6
// vc_forest on forest streams: VC(W) <= output <= 4(1+e)^2/(1-e)^2 VC(W),
// and VC(W) = m(W) on every tested window.
outcome criterion_vc_forest() {
    std::vector<std::future<outcome>> futures;
    for (unsigned wk = 0; wk < 6; ++wk) {
        futures.push_back(std::async(std::launch::async, [wk] {
            outcome out;
            for (int i = 0; i < 10; ++i) {
                const std::uint64_t seed = 800 + wk * 10 + i;
                const double eps = (seed % 2) ? 0.1 : 0.25;
                // n = 70 keeps every window cover at m <= 35, inside the
                // oracle's depth cap
                auto stream = gen_forest(70, 69, seed).edges;
                const std::uint64_t w = (seed % 3) ? 50 : 30;
                algo_spec spec{window_algo::vc_forest, 1, eps, w};
                vc_forest_window alg(spec);
                const double bound = upper_ratio_bound(spec);
                for (std::size_t t = 1; t <= stream.size(); ++t) {
                    alg.update(stream[t - 1]);
                    const double vc = window_truth(stream, w, t, window_problem::vertex_cover);
                    const double m = window_truth(stream, w, t, window_problem::matching);
                    const double q = alg.estimate();
                    ++out.checks;
                    if (!(vc == m && q >= vc && q <= bound * vc)) {
                        ++out.violations;
                        if (out.note.empty()) {
                            std::ostringstream os;
                            os << "seed " << seed << " t " << t << " q " << q << " VC " << vc
                               << " m " << m;
                            out.note = os.str();
                        }
                    }
                }
            }
            return out;
        }));
    }
    outcome total;
    for (auto& f : futures) total.merge(f.get());
    total.pass = total.violations == 0;
    return total;
}

// ---------------------------------------------------------------- criterion 7
// Online alpha-good tracker equals the brute-force definition on every
// prefix of 1,000 random streams.
outcome criterion_tracker_equivalence() {
    std::vector<std::future<outcome>> futures;
    for (unsigned wk = 0; wk < 8; ++wk) {
        futures.push_back(std::async(std::launch::async, [wk] {
            outcome out;
            for (int i = 0; i < 125; ++i) {
                const std::uint64_t seed = 5000 + wk * 125 + i;
                rng gen(seed);
                const auto n = static_cast<vertex_id>(gen.uniform(6, 40));
                const std::size_t len = static_cast<std::size_t>(gen.uniform(120, 300));
                std::vector<edge> stream;
                while (stream.size() < len) {
                    auto u = static_cast<vertex_id>(gen.uniform(1, n));
                    auto v = static_cast<vertex_id>(gen.uniform(1, n));
                    if (u != v) stream.emplace_back(u, v);
                }
                const auto alpha = static_cast<std::uint32_t>(1 + seed % 3);
                auto expected = alpha_good_prefix_counts(stream, alpha);
                alpha_good_tracker tracker(alpha);
                std::size_t expected_star = 0;
                for (std::size_t t = 1; t <= stream.size(); ++t) {
                    tracker.ingest(stream[t - 1]);
                    expected_star = std::max(expected_star, expected[t - 1]);
                    ++out.checks;
                    if (tracker.current_count() != expected[t - 1] ||
                        tracker.value() != double(expected_star)) {
                        ++out.violations;
                        if (out.note.empty())
                            out.note = "seed " + std::to_string(seed) + " t " + std::to_string(t);
                    }
                }
            }
            return out;
        }));
    }
    outcome total;
    for (auto& f : futures) total.merge(f.get());
    total.pass = total.violations == 0;
    return total;
}

// ---------------------------------------------------------------- criterion 8
// Space proxies: bucket count within 2 ceil(log(V+1)/log(1/(1-e))) + 4 for
// the count estimator across the eps/w grid, and the restart wrapper never
// holds more than two live instances.
outcome criterion_space_proxy() {
    outcome out;
    for (double eps : {0.1, 0.25, 0.5}) {
        for (std::uint64_t w : {16ull, 256ull}) {
            histogram_config cfg{eps, w, 1.0, 1.0, 1.0};
            sliding_histogram<count_estimator<int>> hist(cfg);
            double vmax = 0.0;
            for (int t = 1; t <= int(4 * w); ++t) {
                hist.update(t);
                for (std::size_t i = 0; i < hist.bucket_count(); ++i)
                    vmax = std::max(vmax, hist.bucket_at(i).cached_value);
                const double bound =
                    2.0 * std::ceil(std::log(vmax + 1.0) / std::log(1.0 / (1.0 - eps))) + 4.0;
                ++out.checks;
                if (double(hist.bucket_count()) > bound) {
                    ++out.violations;
                    if (out.note.empty()) {
                        std::ostringstream os;
                        os << "eps " << eps << " w " << w << " t " << t << " k "
                           << hist.bucket_count() << " bound " << bound;
                        out.note = os.str();
                    }
                }
            }
            using inner = sliding_histogram<count_estimator<int>>;
            doubling_wrapper<inner> wrapped(w, [cfg] { return inner(cfg); });
            for (int t = 1; t <= int(5 * w); ++t) {
                wrapped.update(t);
                ++out.checks;
                if (wrapped.instance_count() > 2) {
                    ++out.violations;
                    if (out.note.empty()) out.note = "more than two live instances";
                }
            }
        }
    }
    out.pass = out.violations == 0;
    return out;
}

// ---------------------------------------------------------------- criterion 9
// Golden trace of the update rule: count estimator, eps = 1/2, w = 4,
// 8 items; bucket starts and values must match the hand-derived table.
outcome criterion_golden_trace() {
    outcome out;
    const std::vector<std::vector<std::uint64_t>> expected_starts{
        {1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {1, 3, 4, 5}, {3, 4, 5, 6}, {3, 5, 6, 7}, {5, 6, 7, 8}};
    sliding_histogram<count_estimator<int>> hist({0.5, 4, 1.0, 2.0, 1.0});
    for (int t = 1; t <= 8; ++t) {
        hist.update(t);
        const auto& starts = expected_starts[std::size_t(t - 1)];
        ++out.checks;
        bool ok = hist.bucket_count() == starts.size();
        for (std::size_t i = 0; ok && i < starts.size(); ++i) {
            ok = hist.bucket_at(i).start_index == starts[i] &&
                 hist.bucket_at(i).cached_value == double(t) - double(starts[i]) + 1.0;
        }
        if (!ok) {
            ++out.violations;
            if (out.note.empty()) out.note = "trace diverged at t=" + std::to_string(t);
        }
    }
    out.pass = out.violations == 0;
    return out;
}

} // namespace

int main() {
    struct criterion {
        int id;
        const char* name;
        outcome (*run)();
    };
    const std::vector<criterion> criteria{
        {1, "subadditivity suite", criterion_subadditivity},
        {2, "almost-smoothness suite (incl. d=1.9 tightness)", criterion_almost_smooth},
        {3, "framework guarantee with exact estimator", criterion_framework_exact},
        {4, "matching estimate bound on arboricity streams", criterion_mm_sw},
        {5, "vertex-cover reporting bound and carryover", criterion_sw_vc},
        {6, "forest vertex-cover estimate bound", criterion_vc_forest},
        {7, "alpha-good tracker equals brute force", criterion_tracker_equivalence},
        {8, "bucket and instance space proxies", criterion_space_proxy},
        {9, "golden update-rule trace", criterion_golden_trace},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        outcome out = c.run();
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all_pass = all_pass && out.pass;
        std::printf("[%s] criterion %d: %s — %zu checks, %zu violations (%.1fs)%s%s\n",
                    out.pass ? "PASS" : "FAIL", c.id, c.name, out.checks, out.violations, secs,
                    out.note.empty() ? "" : " — ", out.note.c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria passed" : "acceptance: FAILURES");
    return all_pass ? 0 : 1;
}
