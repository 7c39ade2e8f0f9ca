#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "lincbo/context.hpp"
#include "lincbo/dgbasis.hpp"

namespace lincbo {

struct BenchRecord {
    std::string dataset;
    AlgorithmId algorithm = AlgorithmId::lincbo;
    int repeat = 0;
    double mean_ms = 0.0;
    std::uint64_t intents = 0;
    std::uint64_t pseudo_intents = 0;
    std::uint64_t closure_calls = 0;
};

/// All algorithms must report identical counts per dataset; a disagreement
/// is a correctness failure, not a measurement artifact.
inline bool bench_counts_agree(const std::vector<BenchRecord>& records) {
    for (const auto& a : records)
        for (const auto& b : records)
            if (a.dataset == b.dataset && (a.intents != b.intents || a.pseudo_intents != b.pseudo_intents))
                return false;
    return true;
}

/// Runs every (dataset, algorithm) pair `repeat` times and reports the mean
/// wall time. With jobs > 1 the pairs run in parallel (each run still single
/// threaded); keep jobs = 1 when the timings themselves matter.
inline std::vector<BenchRecord> run_bench(const std::vector<std::pair<std::string, const FormalContext*>>& datasets,
                                          const std::vector<AlgorithmId>& algorithms, int repeat, int jobs = 1) {
    if (repeat < 1) throw std::invalid_argument("run_bench: repeat must be >= 1");
    struct Task {
        std::size_t dataset;
        AlgorithmId algorithm;
    };
    std::vector<Task> tasks;
    for (std::size_t d = 0; d < datasets.size(); ++d)
        for (AlgorithmId algo : algorithms) tasks.push_back(Task{d, algo});
    std::vector<BenchRecord> records(tasks.size());

    auto run_task = [&](std::size_t t) {
        const Task& task = tasks[t];
        const FormalContext& ctx = *datasets[task.dataset].second;
        double total_ms = 0.0;
        BasisResult last;
        for (int r = 0; r < repeat; ++r) {
            last = compute_basis(ctx, task.algorithm);
            total_ms += last.wall_ms;
        }
        records[t] = BenchRecord{datasets[task.dataset].first, task.algorithm, repeat,
                                 total_ms / repeat,           last.intent_count, last.pseudo_intent_count,
                                 last.closure_calls};
    };

    if (jobs <= 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) run_task(t);
    } else {
        std::mutex mtx;
        std::size_t next = 0;
        auto worker = [&] {
            while (true) {
                std::size_t t;
                {
                    std::lock_guard<std::mutex> lock(mtx);
                    if (next >= tasks.size()) return;
                    t = next++;
                }
                run_task(t);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return records;
}

inline std::string bench_csv_header() {
    return "dataset,algorithm,repeat,mean_ms,intents,pseudo_intents,closure_calls";
}

inline std::string bench_record_csv(const BenchRecord& rec) {
    std::string out = rec.dataset;
    out += ',';
    out += to_string(rec.algorithm);
    out += ',' + std::to_string(rec.repeat);
    out += ',' + std::to_string(rec.mean_ms);
    out += ',' + std::to_string(rec.intents);
    out += ',' + std::to_string(rec.pseudo_intents);
    out += ',' + std::to_string(rec.closure_calls);
    return out;
}

}  // namespace lincbo
