#include "thinset/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <set>
#include <thread>

#include "thinset/errors.hpp"

namespace thinset {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetState {
    long long max_nodes;
    Clock::time_point deadline;
    bool has_deadline;
    std::atomic<long long> nodes{0};
    std::atomic<bool> exceeded{false};

    explicit BudgetState(const SearchBudget& b)
        : max_nodes(b.max_nodes),
          deadline(Clock::now() +
                   std::chrono::duration_cast<Clock::duration>(
                       std::chrono::duration<double>(b.max_seconds > 0 ? b.max_seconds : 0))),
          has_deadline(b.max_seconds > 0) {}

    // returns false once any limit is hit; checked at every search node
    bool tick() {
        long long n = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (max_nodes > 0 && n > max_nodes) {
            exceeded.store(true, std::memory_order_relaxed);
            return false;
        }
        if (has_deadline && (n & 1023) == 0 && Clock::now() > deadline) {
            exceeded.store(true, std::memory_order_relaxed);
            return false;
        }
        return exceeded.load(std::memory_order_relaxed) == false;
    }
};

/// One thin-set DFS below a fixed first-element choice. The color set is
/// tracked incrementally with an undo stack; only complete n-tuples
/// whose maximum is the newly added element are (re)colored.
class ThinDfs {
public:
    ThinDfs(const Coloring& f, int ell, int m, BudgetState& budget)
        : f_(f), ell_(ell), m_(m), budget_(budget),
          domain_(f.domain()), seen_(f.palette().size(), false) {}

    // lexicographically least completion starting from domain index root
    std::optional<std::vector<int>> run(int root) {
        chosen_.clear();
        chosen_idx_.clear();
        std::fill(seen_.begin(), seen_.end(), false);
        used_ = 0;
        int added = add_element(root);
        if (used_ > ell_) {
            undo(added);
            return std::nullopt;
        }
        auto out = extend(root + 1);
        undo(added);
        return out;
    }

private:
    const Coloring& f_;
    int ell_, m_;
    BudgetState& budget_;
    const std::vector<int>& domain_;
    std::vector<bool> seen_;
    int used_ = 0;
    std::vector<int> chosen_;
    std::vector<int> chosen_idx_;
    std::vector<int> undo_stack_;

    // colors every n-tuple ending at the new element; returns the number
    // of undo entries pushed
    int add_element(int idx) {
        const int n = f_.arity();
        int x = domain_[idx];
        chosen_.push_back(x);
        chosen_idx_.push_back(idx);
        int pushed = 0;
        int have = static_cast<int>(chosen_.size());
        if (have >= n) {
            // choose n-1 earlier positions, x closes the tuple
            std::vector<int> pick(n - 1);
            std::vector<int> tuple(n);
            tuple[n - 1] = x;
            auto rec = [&](auto&& self, int start, int depth) -> void {
                if (depth == n - 1) {
                    for (int i = 0; i < n - 1; ++i) tuple[i] = chosen_[pick[i]];
                    int c = f_.color_of(tuple);
                    if (!seen_[c]) {
                        seen_[c] = true;
                        ++used_;
                        undo_stack_.push_back(c);
                        ++pushed;
                    }
                    return;
                }
                for (int i = start; i <= have - 1 - (n - 1 - depth); ++i) {
                    pick[depth] = i;
                    self(self, i + 1, depth + 1);
                }
            };
            rec(rec, 0, 0);
        }
        return pushed;
    }

    void undo(int pushed) {
        chosen_.pop_back();
        chosen_idx_.pop_back();
        for (int i = 0; i < pushed; ++i) {
            seen_[undo_stack_.back()] = false;
            undo_stack_.pop_back();
            --used_;
        }
    }

    std::optional<std::vector<int>> extend(int from) {
        if (!budget_.tick()) throw BudgetExceededError("thin-set search budget exceeded");
        if (static_cast<int>(chosen_.size()) == m_) return chosen_;
        int need = m_ - static_cast<int>(chosen_.size());
        for (int i = from; i + need <= static_cast<int>(domain_.size()); ++i) {
            int pushed = add_element(i);
            if (used_ <= ell_) {
                auto out = extend(i + 1);
                if (out) {
                    undo(pushed);
                    return out;
                }
            }
            undo(pushed);
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<ThinWitness> find_thin_set(const Coloring& f, int ell, int m,
                                         const SearchBudget& budget) {
    if (ell < 1) throw InputError("thinness bound must be at least 1");
    if (m < 1) throw InputError("target size must be at least 1");
    if (m > static_cast<int>(f.domain().size()))
        throw InputError("target size exceeds the domain");
    BudgetState state(budget);
    const int max_root = static_cast<int>(f.domain().size()) - m;

    std::optional<std::vector<int>> best;
    if (budget.workers <= 1) {
        ThinDfs dfs(f, ell, m, state);
        for (int root = 0; root <= max_root && !best; ++root) best = dfs.run(root);
    } else {
        std::vector<std::optional<std::vector<int>>> by_root(max_root + 1);
        std::atomic<int> next{0};
        std::atomic<int> best_root{max_root + 1};
        std::mutex err_mutex;
        std::exception_ptr first_error;
        auto work = [&]() {
            ThinDfs dfs(f, ell, m, state);
            while (true) {
                int root = next.fetch_add(1);
                if (root > max_root) return;
                if (root > best_root.load()) continue;
                try {
                    auto got = dfs.run(root);
                    if (got) {
                        by_root[root] = std::move(got);
                        int cur = best_root.load();
                        while (root < cur && !best_root.compare_exchange_weak(cur, root)) {
                        }
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    state.exceeded.store(true);
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < budget.workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
        if (first_error) std::rethrow_exception(first_error);
        for (int root = 0; root <= max_root && !best; ++root)
            if (by_root[root]) best = by_root[root];
    }
    if (!best) return std::nullopt;
    return make_thin_witness(f, *best, ell);
}

std::optional<ThinWitness> brute_thin_oracle(const Coloring& f, int ell, int m) {
    if (ell < 1) throw InputError("thinness bound must be at least 1");
    if (m < 1) throw InputError("target size must be at least 1");
    const auto& domain = f.domain();
    const int d = static_cast<int>(domain.size());
    if (m > d) throw InputError("target size exceeds the domain");
    // C(d, m) subsets, each recounted from scratch
    double count = 1;
    for (int i = 0; i < m; ++i) count = count * (d - i) / (i + 1);
    if (count > 2e6) throw SizeGuardError("instance too large for the brute oracle");

    const int n = f.arity();
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    std::vector<int> H(m);
    while (true) {
        for (int i = 0; i < m; ++i) H[i] = domain[idx[i]];
        std::set<int> used;
        bool ok = true;
        if (m >= n) {
            std::vector<int> t_idx(n);
            for (int i = 0; i < n; ++i) t_idx[i] = i;
            std::vector<int> tuple(n);
            while (ok) {
                for (int i = 0; i < n; ++i) tuple[i] = H[t_idx[i]];
                used.insert(f.color_of(tuple));
                if (static_cast<int>(used.size()) > ell) ok = false;
                int i = n - 1;
                while (i >= 0 && t_idx[i] == m - n + i) --i;
                if (i < 0) break;
                ++t_idx[i];
                for (int j = i + 1; j < n; ++j) t_idx[j] = t_idx[j - 1] + 1;
            }
        }
        if (ok) return make_thin_witness(f, H, ell);
        int i = m - 1;
        while (i >= 0 && idx[i] == d - m + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return std::nullopt;
}

namespace {

/// Counterexample hunt for one N: is there a k-coloring of the n-tuples
/// of {0..N-1} with no thin m-subset? Colorings are enumerated with
/// colors named by first occurrence, which covers every coloring up to
/// renaming; thinness is renaming-invariant.
class ExtremalProbe {
public:
    ExtremalProbe(int n, int k, int ell, int m, int N, BudgetState& budget)
        : n_(n), k_(k), ell_(ell), m_(m), N_(N), budget_(budget) {
        // lex-ordered n-tuples of {0..N-1}; tuple_of_[i] = i-th tuple
        std::vector<int> t(n_);
        for (int i = 0; i < n_; ++i) t[i] = i;
        if (n_ <= N_) {
            while (true) {
                tuples_.push_back(t);
                int i = n_ - 1;
                while (i >= 0 && t[i] == N_ - n_ + i) --i;
                if (i < 0) break;
                ++t[i];
                for (int j = i + 1; j < n_; ++j) t[j] = t[j - 1] + 1;
            }
        }
        color_.assign(tuples_.size(), -1);
        build_subsets();
    }

    bool counterexample_exists() { return dfs(0, 0); }

private:
    int n_, k_, ell_, m_, N_;
    BudgetState& budget_;
    std::vector<std::vector<int>> tuples_;
    std::vector<int> color_;
    // tuple indices per m-subset, for the thinness recount
    std::vector<std::vector<int>> subset_tuples_;

    void build_subsets() {
        if (m_ > N_) return;
        std::vector<int> s(m_);
        for (int i = 0; i < m_; ++i) s[i] = i;
        while (true) {
            std::vector<int> tuple_ids;
            if (m_ >= n_) {
                std::vector<int> pick(n_);
                for (int i = 0; i < n_; ++i) pick[i] = i;
                std::vector<int> t(n_);
                while (true) {
                    for (int i = 0; i < n_; ++i) t[i] = s[pick[i]];
                    tuple_ids.push_back(tuple_index(t));
                    int i = n_ - 1;
                    while (i >= 0 && pick[i] == m_ - n_ + i) --i;
                    if (i < 0) break;
                    ++pick[i];
                    for (int j = i + 1; j < n_; ++j) pick[j] = pick[j - 1] + 1;
                }
            }
            subset_tuples_.push_back(std::move(tuple_ids));
            int i = m_ - 1;
            while (i >= 0 && s[i] == N_ - m_ + i) --i;
            if (i < 0) break;
            ++s[i];
            for (int j = i + 1; j < m_; ++j) s[j] = s[j - 1] + 1;
        }
    }

    int tuple_index(const std::vector<int>& t) const {
        auto it = std::lower_bound(tuples_.begin(), tuples_.end(), t);
        return static_cast<int>(it - tuples_.begin());
    }

    bool some_subset_thin() const {
        for (const auto& ids : subset_tuples_) {
            std::set<int> used;
            for (int id : ids) used.insert(color_[id]);
            if (static_cast<int>(used.size()) <= ell_) return true;
        }
        return false;
    }

    bool dfs(size_t pos, int palette_used) {
        if (!budget_.tick())
            throw BudgetExceededError("extremal search budget exceeded at N = " +
                                      std::to_string(N_));
        if (pos == tuples_.size()) return !some_subset_thin();
        int limit = std::min(k_ - 1, palette_used);
        for (int c = 0; c <= limit; ++c) {
            color_[pos] = c;
            if (dfs(pos + 1, std::max(palette_used, c + 1))) return true;
        }
        color_[pos] = -1;
        return false;
    }
};

} // namespace

int extremal_number(int n, int k, int ell, int m, const SearchBudget& budget) {
    if (n < 1 || k < 1 || m < 1) throw InputError("extremal parameters must be positive");
    if (ell < 1) throw InputError("thinness bound must be at least 1");
    if (ell >= k) return m; // every subset is thin, a size-m one needs N = m
    constexpr int kMaxN = 12;
    if (m > kMaxN) throw SizeGuardError("target size exceeds the extremal search bound 12");
    BudgetState state(budget);
    int last_counterexample = -1;
    for (int N = m; N <= kMaxN; ++N) {
        // cheap size guard before committing to the coloring search
        long long tuples = 0;
        if (N >= n) {
            tuples = 1;
            for (int i = 0; i < n; ++i) tuples = tuples * (N - i) / (i + 1);
        }
        double colorings = 1;
        for (long long i = 0; i < tuples && colorings <= 5e7; ++i) colorings *= k;
        if (colorings > 5e7)
            throw BudgetExceededError(
                "extremal search space too large at N = " + std::to_string(N) +
                "; best known: counterexamples up to N = " +
                std::to_string(last_counterexample));
        ExtremalProbe probe(n, k, ell, m, N, state);
        if (!probe.counterexample_exists()) return N;
        last_counterexample = N;
    }
    throw BudgetExceededError("no extremal number found up to N = " + std::to_string(kMaxN) +
                              "; best known: counterexamples up to N = " +
                              std::to_string(last_counterexample));
}

} // namespace thinset
