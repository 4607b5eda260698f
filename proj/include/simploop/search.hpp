#ifndef SIMPLOOP_SEARCH_HPP
#define SIMPLOOP_SEARCH_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "simploop/errors.hpp"

namespace simploop {

/// Anything the contiguity searches need from a complex: vertex ids
/// 0..n-1, a simplex oracle on small id sets (repeats allowed), and
/// sorted closed neighborhoods.  Satisfied by SimplicialComplex and by
/// OmegaSkeleton, so the same search runs on loops in X and on loops
/// in the loop space.
template <class C>
concept ComplexLike = requires(const C& c, std::span<const int> s, int v) {
    { c.vertex_count() } -> std::convertible_to<int>;
    { c.is_simplex(s) } -> std::convertible_to<bool>;
    { c.closed_neighbors(v) } -> std::convertible_to<const std::vector<int>&>;
};

using Seq = std::vector<int>;

enum class SearchStatus { Found, ExhaustedNotFound, BudgetNotFound };

/// Chain of same-length sequences from `from` to `to`, adjacent pairs
/// contiguous.  `dequeued` counts distinct sequences expanded.
struct ChainResult {
    SearchStatus status = SearchStatus::BudgetNotFound;
    std::vector<Seq> chain;
    long long dequeued = 0;
};

namespace detail {

struct SeqHash {
    size_t operator()(const Seq& s) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int v : s) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return static_cast<size_t>(h);
    }
};

// Streams every sequence contiguous to `base` (same length, endpoints
// pinned) into `emit`, in lexicographic order.  Candidates for position i
// are closed neighbors of base[i]; the quadruple at i-1 is re-checked as
// each position is chosen, which prunes before the suffix is expanded.
template <ComplexLike C>
void for_each_contiguous(const C& cx, const Seq& base, const std::function<bool(const Seq&)>& emit) {
    const int n = static_cast<int>(base.size());
    Seq cur(base.size());
    cur.front() = base.front();
    cur.back() = base.back();
    bool stop = false;

    auto quad_ok = [&](int i) {
        int ids[4] = {base[static_cast<size_t>(i)], base[static_cast<size_t>(i) + 1],
                      cur[static_cast<size_t>(i)], cur[static_cast<size_t>(i) + 1]};
        return cx.is_simplex(std::span<const int>(ids, 4));
    };

    std::function<void(int)> rec = [&](int i) {
        if (stop) return;
        if (i == n - 1) {
            if (quad_ok(n - 2)) {
                if (!emit(cur)) stop = true;
            }
            return;
        }
        for (int v : cx.closed_neighbors(base[static_cast<size_t>(i)])) {
            cur[static_cast<size_t>(i)] = v;
            if (i >= 1 && !quad_ok(i - 1)) continue;
            rec(i + 1);
            if (stop) return;
        }
    };

    if (n == 1) {
        emit(cur);
        return;
    }
    if (n == 2) {
        if (quad_ok(0)) emit(cur);
        return;
    }
    rec(1);
}

} // namespace detail

/// Breadth-first search over the contiguity graph of same-length
/// sequences with pinned endpoints.  Deterministic: FIFO order,
/// lexicographic neighbor generation, budget counts dequeues.
template <ComplexLike C>
ChainResult contiguity_chain_search(const C& cx, const Seq& from, const Seq& to, long long budget) {
    if (from.size() != to.size()) throw ValidationError("contiguity search needs equal lengths");
    if (budget <= 0) throw ValidationError("budget must be positive");
    if (from.front() != to.front() || from.back() != to.back())
        throw ValidationError("contiguity search keeps endpoints fixed");

    ChainResult res;
    if (from == to) {
        res.status = SearchStatus::Found;
        res.chain = {from};
        return res;
    }

    std::unordered_map<Seq, int, detail::SeqHash> id_of;
    std::vector<Seq> seqs;
    std::vector<int> parent;
    auto intern = [&](const Seq& s, int par) {
        auto [it, fresh] = id_of.emplace(s, static_cast<int>(seqs.size()));
        if (fresh) {
            seqs.push_back(s);
            parent.push_back(par);
        }
        return std::pair<int, bool>(it->second, fresh);
    };

    std::deque<int> queue;
    intern(from, -1);
    queue.push_back(0);
    int goal = -1;

    // Emission cap: dense complexes can have exponentially many contiguous
    // neighbors per node, so bound the total streamed candidates as well.
    long long emissions = 0;
    const long long emission_cap = budget > (1LL << 40) ? budget : budget * 256;
    bool truncated = false;

    while (!queue.empty() && res.dequeued < budget) {
        int cur = queue.front();
        queue.pop_front();
        ++res.dequeued;
        Seq base = seqs[static_cast<size_t>(cur)]; // copy: seqs may reallocate
        detail::for_each_contiguous(cx, base, std::function<bool(const Seq&)>([&](const Seq& nb) {
            if (++emissions > emission_cap) {
                truncated = true;
                return false;
            }
            auto [id, fresh] = intern(nb, cur);
            if (fresh) {
                if (nb == to) {
                    goal = id;
                    return false;
                }
                queue.push_back(id);
            }
            return true;
        }));
        if (goal >= 0 || truncated) break;
    }

    if (goal < 0) {
        res.status = (queue.empty() && !truncated) ? SearchStatus::ExhaustedNotFound
                                                   : SearchStatus::BudgetNotFound;
        return res;
    }
    for (int v = goal; v >= 0; v = parent[static_cast<size_t>(v)]) res.chain.push_back(seqs[static_cast<size_t>(v)]);
    std::reverse(res.chain.begin(), res.chain.end());
    res.status = SearchStatus::Found;
    return res;
}

/// Certificate that two based sequences are equal up to trivial extensions
/// plus a contiguity chain at common length m.
struct EquivCertificate {
    int common_length = 0;
    std::vector<Seq> chain; // from same_size(a) to same_size(b)
};

struct EquivResult {
    SearchStatus status = SearchStatus::BudgetNotFound;
    std::optional<EquivCertificate> certificate;
    long long dequeued = 0;
    bool all_lengths_exhausted = false; // every m <= cap exhausted its class
};

/// Decide (semi-decide) extension-contiguity equivalence by trivially
/// extending both sequences to each common length m <= max_len and running
/// the same-length search.  "Not found" is never a proof of inequivalence.
template <ComplexLike C>
EquivResult extension_contiguity_search(const C& cx, const Seq& a, const Seq& b, int max_len,
                                        long long budget) {
    const int la = static_cast<int>(a.size()) - 1;
    const int lb = static_cast<int>(b.size()) - 1;
    if (max_len < la || max_len < lb)
        throw ValidationError("max_len smaller than an input length");
    EquivResult res;
    res.all_lengths_exhausted = true;
    for (int m = std::max(la, lb); m <= max_len; ++m) {
        Seq ea = a, eb = b;
        ea.insert(ea.end(), static_cast<size_t>(m - la), a.back());
        eb.insert(eb.end(), static_cast<size_t>(m - lb), b.back());
        ChainResult r = contiguity_chain_search(cx, ea, eb, budget);
        res.dequeued += r.dequeued;
        if (r.status == SearchStatus::Found) {
            res.status = SearchStatus::Found;
            res.certificate = EquivCertificate{m, std::move(r.chain)};
            return res;
        }
        if (r.status != SearchStatus::ExhaustedNotFound) res.all_lengths_exhausted = false;
    }
    res.status = res.all_lengths_exhausted ? SearchStatus::ExhaustedNotFound : SearchStatus::BudgetNotFound;
    return res;
}

} // namespace simploop

#endif
