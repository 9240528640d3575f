#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "flagforge/bipartite.hpp"
#include "flagforge/decomposability.hpp"
#include "flagforge/errors.hpp"
#include "flagforge/homology.hpp"
#include "flagforge/search.hpp"

namespace flagforge {

std::optional<Graph> realize_f_as_flag(const IntVector& f_in, int n_max, const Budget& budget) {
    if (f_in.empty() || f_in[0] != 1) throw DomainError("f-vector must start with 1");
    for (auto v : f_in)
        if (v < 0) throw DomainError("f-vector entries must be nonnegative");
    const IntVector f = strip_trailing_zeros(f_in);
    const std::int64_t n64 = f.size() > 1 ? f[1] : 0;
    if (n64 > n_max) return std::nullopt;
    if (n64 > budget.dedup_vertices) throw BudgetExceeded("f_0 exceeds the enumeration cap");
    const int n = static_cast<int>(n64);
    const std::int64_t edges = binomial(n, 2) - (f.size() > 2 ? f[2] : 0);
    if (edges < 0) return std::nullopt;
    for (const Graph& g : graph_classes(n, budget)) {
        if (static_cast<std::int64_t>(g.size()) != edges) continue;
        if (strip_trailing_zeros(f_vector(independence_complex(g))) == f) return g;
    }
    return std::nullopt;
}

namespace {

// Graphs of the scan stream, in order: n = 0..n_max, then the per-n enumeration.
void for_each_stream_graph(const ScanOptions& o, const Budget& budget, const std::function<bool(const Graph&)>& fn) {
    for (int n = 0; n <= o.n_max; ++n) {
        if (o.dedup && o.bipartite_only) {
            for (const Graph& g : bipartite_classes(n, budget))
                if (fn(g)) return;
            continue;
        }
        bool stop = false;
        for_each_graph(n, o.dedup, [&](const Graph& g) {
            if (o.bipartite_only && !is_bipartite(g)) return false;
            stop = fn(g);
            return stop;
        }, budget);
        if (stop) return;
    }
}

class Scanner {
public:
    Scanner(const ScanOptions& o, const Budget& b) : options_(o), budget_(b) {}

    std::optional<ScanRecord> process(const Graph& g) {
        const SimplicialComplex ind = independence_complex(g);
        if (!is_pure(ind) || !is_vertex_decomposable(ind)) return std::nullopt;
        ScanRecord r{g, strip_trailing_zeros(h_vector(ind)), std::nullopt, is_cm(ind)};
        if (!r.cohen_macaulay) throw std::logic_error("vertex-decomposable complex fails the Cohen-Macaulay check");
        if (options_.bipartite_only)
            r.realizer = compress(g).graph;
        else
            r.realizer = realize(r.h);
        return r;
    }

private:
    std::optional<Graph> realize(const IntVector& h) {
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (auto it = cache_.find(h); it != cache_.end()) return it->second;
        }
        auto found = realize_f_as_flag(h, budget_.dedup_vertices, budget_);
        std::lock_guard<std::mutex> lock(mutex_);
        cache_.emplace(h, found);
        return found;
    }

    ScanOptions options_;
    Budget budget_;
    std::mutex mutex_;
    std::map<IntVector, std::optional<Graph>> cache_;
};

ScanReport continue_scan(ScanReport report, std::uint64_t limit, int jobs, const Budget& budget) {
    const ScanOptions& o = report.options;
    if (o.n_max < 0) throw DomainError("negative vertex bound");
    std::vector<Graph> batch;
    std::uint64_t index = 0;
    std::string previous;
    bool exhausted = true;
    for_each_stream_graph(o, budget, [&](const Graph& g) {
        if (index < report.position) {
            if (index + 1 == report.position) previous = to_graph6(g);
            ++index;
            return false;
        }
        if (limit && batch.size() >= limit) {
            exhausted = false;
            return true;
        }
        batch.push_back(g);
        ++index;
        return false;
    });
    if (report.position > 0 && (index < report.position || previous != report.last))
        throw DomainError("resume point does not match the enumeration");

    std::vector<std::optional<ScanRecord>> results(batch.size());
    Scanner scanner(o, budget);
    jobs = std::max(1, jobs);
    auto worker = [&](std::size_t w) {
        for (std::size_t i = w; i < batch.size(); i += static_cast<std::size_t>(jobs)) results[i] = scanner.process(batch[i]);
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            threads.emplace_back([&, w] {
                try {
                    worker(static_cast<std::size_t>(w));
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        for (auto& t : threads) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    for (auto& r : results) {
        if (!r) continue;
        if (!r->realizer) report.counterexamples.push_back(report.records.size());
        report.records.push_back(std::move(*r));
        ++report.pure_vd;
    }
    report.position += batch.size();
    if (!batch.empty()) report.last = to_graph6(batch.back());
    report.complete = exhausted;
    return report;
}

}  // namespace

ScanReport scan_conjecture(const ScanOptions& options, const Budget& budget) {
    ScanReport report;
    report.options = options;
    return continue_scan(std::move(report), options.limit, options.jobs, budget);
}

ScanReport resume_scan(ScanReport partial, std::uint64_t limit, int jobs, const Budget& budget) {
    partial.options.limit = limit;
    partial.options.jobs = jobs;
    return continue_scan(std::move(partial), limit, jobs, budget);
}

H133Report scan_h133(int n_max, const Budget& budget) {
    H133Report out;
    out.n_max = n_max;
    const IntVector target{1, 3, 3};
    for (int n = 0; n <= n_max && !out.witness; ++n) {
        for (const Graph& g : graph_classes(n, budget)) {
            ++out.graphs_checked;
            if (strip_trailing_zeros(h_vector(independence_complex(g))) == target) {
                out.witness = g;
                break;
            }
        }
    }
    return out;
}

}  // namespace flagforge
