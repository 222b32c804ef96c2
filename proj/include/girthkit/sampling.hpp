#ifndef GIRTHKIT_SAMPLING_HPP
#define GIRTHKIT_SAMPLING_HPP

#include <algorithm>
#include <cmath>
#include <memory>
#include <span>
#include <vector>

#include "girthkit/graph.hpp"
#include "girthkit/result.hpp"
#include "girthkit/rng.hpp"
#include "girthkit/shortest_paths.hpp"

namespace girthkit {

// Multipliers in front of the log n terms. Every derived count is capped at
// the population it is drawn from.
struct SamplingConstants {
    double landmark_factor = 100.0;   // |Q| = f * n^a * log n
    double high_girth_factor = 100.0; // |R| = f * n^(1-delta) * log n
    double set_factor = 100.0;        // |S_{j,k}| = f * sqrt(n) log n, or p = f log n / n^alpha
    double rounds_factor = 2.0;       // rounds = ceil(f * log n)
    double per_round_factor = 10.0;   // per-round draw and early-exit size = ceil(f * log n)

    static SamplingConstants defaults() { return {}; }

    // Shrinks the sample sizes (not the round counts) so that the pruned
    // searches actually prune on small graphs.
    static SamplingConstants scaled(double f) {
        SamplingConstants c;
        c.landmark_factor *= f;
        c.high_girth_factor *= f;
        c.set_factor *= f;
        c.per_round_factor = std::max(1.0, c.per_round_factor * f);
        return c;
    }

    std::size_t rounds(std::size_t n) const {
        return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(rounds_factor * log_n(n))));
    }
    std::size_t per_round(std::size_t n) const {
        return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(per_round_factor * log_n(n))));
    }
};

inline std::size_t capped_count(double want, std::size_t population) {
    if (!(want < static_cast<double>(population))) return population;
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(want)));
}

// Powers of (1+eps) and the level index of a distance: level(d) = j with
// (1+eps)^j <= d < (1+eps)^(j+1); level(0) = -1 stands for the zero-distance
// boundary level.
class DistanceScale {
public:
    explicit DistanceScale(double eps) : base_(1.0 + eps) {
        if (!(eps > 0)) throw Error(Errc::InvalidEpsilon, "epsilon must be positive");
    }

    double epsilon() const noexcept { return base_ - 1.0; }
    double power(int j) const { return std::pow(base_, j); }

    int level(Weight d) const {
        if (d <= 0) return -1;
        const double x = static_cast<double>(d);
        int j = static_cast<int>(std::floor(std::log(x) / std::log(base_)));
        while (j > 0 && power(j) > x) --j;
        while (power(j + 1) <= x) ++j;
        return j;
    }

    // ceil(log_{1+eps}(x)) for x >= 1
    int ceil_log(double x) const {
        int j = std::max(0, static_cast<int>(std::ceil(std::log(x) / std::log(base_))));
        while (j > 0 && power(j - 1) >= x) --j;
        while (power(j) < x) ++j;
        return j;
    }

private:
    double base_;
};

// Landmarks with full in/out shortest-path trees. Shared storage so that the
// reversed view (distances swapped) costs nothing and sees later additions.
class LandmarkTable {
public:
    static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

    LandmarkTable() : data_(std::make_shared<Data>()) {}
    LandmarkTable(const DirectedGraph& g, unsigned threads = 1) : LandmarkTable() {
        data_->graph = &g;
        data_->threads = threads;
        data_->index_of.assign(g.n(), kAbsent);
    }

    std::size_t size() const noexcept { return data_->landmarks.size(); }
    Vertex landmark(std::uint32_t k) const { return data_->landmarks[k]; }
    const std::vector<Vertex>& landmarks() const noexcept { return data_->landmarks; }
    std::uint32_t index_of(Vertex v) const { return data_->index_of[v]; }
    bool reversed() const noexcept { return reversed_; }

    // d(landmark_k, v) in this view's orientation
    Weight from(std::uint32_t k, Vertex v) const { return tree(k, !reversed_).dist[v]; }
    // d(v, landmark_k)
    Weight to(std::uint32_t k, Vertex v) const { return tree(k, reversed_).dist[v]; }

    const ShortestPathTree& out_tree(std::uint32_t k) const { return tree(k, !reversed_); }
    const ShortestPathTree& in_tree(std::uint32_t k) const { return tree(k, reversed_); }

    LandmarkTable reversed_view() const {
        LandmarkTable t = *this;
        t.reversed_ = !reversed_;
        return t;
    }

    // Adds the missing vertices (searches run in parallel) and returns their
    // landmark indices in input order.
    std::vector<std::uint32_t> add(std::span<const Vertex> vertices) {
        Data& d = *data_;
        std::vector<Vertex> fresh;
        for (Vertex v : vertices) {
            if (d.index_of[v] != kAbsent) continue;
            d.index_of[v] = static_cast<std::uint32_t>(d.landmarks.size() + fresh.size());
            fresh.push_back(v);
        }
        std::vector<ShortestPathTree> outs(fresh.size()), ins(fresh.size());
        parallel_for(fresh.size(), d.threads, [&](std::size_t k) {
            outs[k] = shortest_paths(*d.graph, fresh[k], Direction::Out);
            ins[k] = shortest_paths(*d.graph, fresh[k], Direction::In);
        });
        for (std::size_t k = 0; k < fresh.size(); ++k) {
            d.landmarks.push_back(fresh[k]);
            d.out.push_back(std::move(outs[k]));
            d.in.push_back(std::move(ins[k]));
        }
        std::vector<std::uint32_t> idx;
        idx.reserve(vertices.size());
        for (Vertex v : vertices) idx.push_back(d.index_of[v]);
        return idx;
    }

private:
    struct Data {
        const DirectedGraph* graph = nullptr;
        unsigned threads = 1;
        std::vector<Vertex> landmarks;
        std::vector<std::uint32_t> index_of;
        std::vector<ShortestPathTree> out, in;
    };

    const ShortestPathTree& tree(std::uint32_t k, bool out) const {
        return out ? data_->out[k] : data_->in[k];
    }

    std::shared_ptr<Data> data_;
    bool reversed_ = false;
};

// Q: `size` vertices uniformly without replacement (capped at n).
struct LandmarkSample {
    LandmarkTable table;
    std::vector<std::uint32_t> q;  // landmark indices of Q
};

inline LandmarkSample sample_Q(const DirectedGraph& g, std::size_t size, std::uint64_t seed,
                               unsigned threads = 1) {
    if (size < 1) throw Error(Errc::InvalidParameters, "landmark sample size must be >= 1");
    LandmarkSample out{LandmarkTable(g, threads), {}};
    Rng rng(derive_seed(seed, Stream::Landmarks));
    std::vector<Vertex> chosen;
    for (auto v : rng.sample_indices(g.n(), size)) chosen.push_back(v);
    std::sort(chosen.begin(), chosen.end());
    out.q = out.table.add(chosen);
    return out;
}

// Closest landmark roundtrip: minimises max(d(q,v), d(v,q)) over q in Q,
// v != q, and separately the roundtrip weight itself. Both come with walks.
struct LandmarkProbe {
    Weight min_radius = kInfinity;  // min over pairs of max(d(q,v), d(v,q))
    GirthResult best_roundtrip;     // min over pairs of d(q,v) + d(v,q)
};

inline LandmarkProbe probe_landmarks(const DirectedGraph& g, const LandmarkTable& lt,
                                     std::span<const std::uint32_t> q) {
    LandmarkProbe p;
    for (std::uint32_t k : q) {
        const Vertex s = lt.landmark(k);
        std::uint32_t best_v = kNoVertex;
        Weight best_rt = kInfinity;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (v == s) continue;
            Weight a = lt.from(k, v), b = lt.to(k, v);
            if (!is_finite(a) || !is_finite(b)) continue;
            p.min_radius = std::min(p.min_radius, std::max(a, b));
            if (a + b < best_rt) {
                best_rt = a + b;
                best_v = v;
            }
        }
        if (best_v != kNoVertex && best_rt < p.best_roundtrip.estimate)
            p.best_roundtrip.offer(best_rt, roundtrip_walk(g, lt.out_tree(k), lt.in_tree(k), best_v));
    }
    return p;
}

// V' = { v : exists q in Q with d(v,q) <= radius and d(q,v) <= radius }, where
// the pair (q, q) only counts if q also has such a partner v != q (a landmark
// alone certifies no cycle) unless `landmarks_always` is set. `strict` switches
// both comparisons to '<'.
inline std::vector<bool> compute_Vprime(const LandmarkTable& lt, std::span<const std::uint32_t> q,
                                        std::size_t n, double radius, bool strict = false,
                                        bool landmarks_always = false) {
    std::vector<bool> in(n, false);
    auto within = [&](Weight d) {
        return is_finite(d) && (strict ? static_cast<double>(d) < radius : static_cast<double>(d) <= radius);
    };
    for (std::uint32_t k : q) {
        const Vertex s = lt.landmark(k);
        bool partner = false;
        for (Vertex v = 0; v < n; ++v) {
            if (v == s) continue;
            if (within(lt.from(k, v)) && within(lt.to(k, v))) {
                in[v] = true;
                partner = true;
            }
        }
        if (partner || landmarks_always) in[s] = true;
    }
    return in;
}

// Per-(vertex, level slot) sample families R^j(u), stored as landmark indices.
struct SampleSets {
    std::size_t n = 0;
    std::size_t slots = 0;  // level slots per vertex
    int scale_index = 0;    // i
    double epsilon = 0, beta = 0, alpha = 0;
    std::size_t rounds = 0, per_round = 0;
    std::vector<std::vector<std::uint32_t>> sets;  // index u * slots + slot
    std::vector<std::uint32_t> rounds_used;        // parallel to sets

    std::span<const std::uint32_t> R(Vertex u, std::size_t slot) const {
        if (slot >= slots) return {};
        return sets[static_cast<std::size_t>(u) * slots + slot];
    }
    std::size_t max_set_size() const {
        std::size_t best = 0;
        for (const auto& s : sets) best = std::max(best, s.size());
        return best;
    }
};

namespace detail {

// The shared iterated sampling loop. `candidates` are the landmark indices in
// u's ball, `member[k]` lists, per round, a landmark-indexed membership flag
// for S_{.,k}, and `close(s, y)` tests the survivor condition d(s,y) <= radius.
template <class Close>
std::vector<std::uint32_t> iterate_rounds(const std::vector<std::uint32_t>& candidates,
                                          const std::vector<std::vector<bool>>& member,
                                          std::size_t per_round, Rng& rng, Close&& close,
                                          std::uint32_t& rounds_used) {
    std::vector<std::uint32_t> alive = candidates;
    std::vector<std::uint32_t> R;
    rounds_used = 0;
    for (std::size_t k = 0; k < member.size(); ++k) {
        ++rounds_used;
        std::vector<std::uint32_t> T;
        for (std::uint32_t s : alive)
            if (s < member[k].size() && member[k][s]) T.push_back(s);
        std::vector<std::uint32_t> picked = T.size() < per_round ? T : rng.sample(T, per_round);
        std::sort(picked.begin(), picked.end());
        std::vector<std::uint32_t> added;
        for (std::uint32_t y : picked)
            if (!std::binary_search(R.begin(), R.end(), y)) added.push_back(y);
        std::vector<std::uint32_t> merged;
        std::merge(R.begin(), R.end(), added.begin(), added.end(), std::back_inserter(merged));
        R.swap(merged);
        if (T.size() < per_round) break;
        std::erase_if(alive, [&](std::uint32_t s) {
            for (std::uint32_t y : added)
                if (!close(s, y)) return true;
            return false;
        });
    }
    return R;
}

inline std::vector<bool> membership(const std::vector<std::uint32_t>& idx) {
    std::vector<bool> m;
    for (std::uint32_t k : idx) {
        if (k >= m.size()) m.resize(k + 1, false);
        m[k] = true;
    }
    return m;
}

}  // namespace detail

// Unweighted iterated sampling. For j in 1..i and rounds k, S_{j,k} is a
// uniform sample of f*sqrt(n)*log n vertices; T_k^j(u) keeps s in S_{j,k} with
// d(u,s) <= j and d(s,y) <= i for every y already in R^j(u). Slot j holds
// R^j(u); slot 0 is empty (level 0 is u itself).
inline SampleSets build_samples_unweighted(const DirectedGraph& g, int i, LandmarkTable& lt,
                                           std::uint64_t seed,
                                           const SamplingConstants& c = SamplingConstants::defaults(),
                                           unsigned threads = 1) {
    if (i < 1) throw Error(Errc::InvalidParameters, "scale i must be >= 1");
    const std::size_t n = g.n();
    SampleSets out;
    out.n = n;
    out.slots = static_cast<std::size_t>(i) + 1;
    out.scale_index = i;
    out.rounds = c.rounds(n);
    out.per_round = c.per_round(n);
    const std::size_t set_size = capped_count(c.set_factor * std::sqrt(double(n)) * log_n(n), n);

    std::vector<std::vector<std::vector<bool>>> member(out.slots);
    for (int j = 1; j <= i; ++j) {
        for (std::size_t k = 0; k < out.rounds; ++k) {
            Rng rng(derive_seed(seed, Stream::SampleSet, {0, std::uint64_t(j), k}));
            std::vector<Vertex> s;
            for (auto v : rng.sample_indices(n, set_size)) s.push_back(v);
            member[j].push_back(detail::membership(lt.add(s)));
        }
    }

    out.sets.assign(n * out.slots, {});
    out.rounds_used.assign(n * out.slots, 0);
    const Weight radius = i;
    parallel_for(n, threads, [&](std::size_t uu) {
        const Vertex u = static_cast<Vertex>(uu);
        std::vector<std::pair<Weight, std::uint32_t>> ball;
        for (std::uint32_t s = 0; s < lt.size(); ++s) {
            Weight d = lt.to(s, u);  // d(u, s)
            if (d <= radius) ball.push_back({d, s});
        }
        std::sort(ball.begin(), ball.end());
        for (int j = 1; j <= i; ++j) {
            std::vector<std::uint32_t> cand;
            for (auto& [d, s] : ball)
                if (d <= j) cand.push_back(s);
            std::sort(cand.begin(), cand.end());
            Rng rng(derive_seed(seed, Stream::SampleDraw, {0, u, std::uint64_t(j)}));
            auto close = [&](std::uint32_t s, std::uint32_t y) {
                return lt.from(s, lt.landmark(y)) <= radius;
            };
            const std::size_t slot = static_cast<std::size_t>(uu) * out.slots + j;
            out.sets[slot] = detail::iterate_rounds(cand, member[j], out.per_round, rng, close,
                                                    out.rounds_used[slot]);
        }
    });
    return out;
}

// Parameters of the generalised sampler.
struct GeneralSampleParams {
    int i = 0;              // distance scale
    double epsilon = 0.25;
    double beta = 1.25;     // survivor radius d = beta * (1+eps)^(i+1)
    double alpha = 0.5;     // S sets drawn with p = f * log n / n^alpha
    int max_level = -1;     // highest level j sampled (default i)
    std::vector<bool> excluded;  // V'_i; empty means nothing excluded
};

// Generalised iterated sampling over Z_i = V \ excluded. Slot 0 is the
// zero-distance level, slot j+1 is level j with ball d(u,s) < (1+eps)^(j+1).
inline SampleSets build_samples_general(const DirectedGraph& g, const GeneralSampleParams& params,
                                        LandmarkTable& lt, std::uint64_t seed,
                                        const SamplingConstants& c = SamplingConstants::defaults(),
                                        unsigned threads = 1) {
    if (params.i < 0 || !(params.beta > 0) || !(params.alpha > 0 && params.alpha < 1))
        throw Error(Errc::InvalidParameters, "general sampler needs i >= 0, beta > 0, 0 < alpha < 1");
    DistanceScale scale(params.epsilon);
    const std::size_t n = g.n();
    const int top = params.max_level < 0 ? params.i : params.max_level;
    SampleSets out;
    out.n = n;
    out.slots = static_cast<std::size_t>(top) + 2;
    out.scale_index = params.i;
    out.epsilon = params.epsilon;
    out.beta = params.beta;
    out.alpha = params.alpha;
    out.rounds = c.rounds(n);
    out.per_round = c.per_round(n);
    const double p = std::min(1.0, c.set_factor * log_n(n) / std::pow(double(n), params.alpha));
    const double radius = params.beta * scale.power(params.i + 1);
    auto excluded = [&](Vertex v) { return !params.excluded.empty() && params.excluded[v]; };

    std::vector<std::vector<std::vector<bool>>> member(out.slots);
    for (std::size_t slot = 0; slot < out.slots; ++slot) {
        for (std::size_t k = 0; k < out.rounds; ++k) {
            Rng rng(derive_seed(seed, Stream::SampleSet, {1, std::uint64_t(params.i), slot, k}));
            std::vector<Vertex> s;
            for (Vertex v = 0; v < n; ++v) {
                bool take = rng.bernoulli(p);
                if (take && !excluded(v)) s.push_back(v);
            }
            member[slot].push_back(detail::membership(lt.add(s)));
        }
    }

    out.sets.assign(n * out.slots, {});
    out.rounds_used.assign(n * out.slots, 0);
    const double outer = scale.power(top + 1);
    parallel_for(n, threads, [&](std::size_t uu) {
        const Vertex u = static_cast<Vertex>(uu);
        if (excluded(u)) return;
        std::vector<std::pair<Weight, std::uint32_t>> ball;
        for (std::uint32_t s = 0; s < lt.size(); ++s) {
            if (excluded(lt.landmark(s))) continue;
            Weight d = lt.to(s, u);  // d(u, s)
            if (is_finite(d) && static_cast<double>(d) < outer) ball.push_back({d, s});
        }
        for (std::size_t slot = 0; slot < out.slots; ++slot) {
            const int j = static_cast<int>(slot) - 1;
            std::vector<std::uint32_t> cand;
            for (auto& [d, s] : ball) {
                bool inside = j < 0 ? d == 0 : static_cast<double>(d) < scale.power(j + 1);
                if (inside) cand.push_back(s);
            }
            std::sort(cand.begin(), cand.end());
            Rng rng(derive_seed(seed, Stream::SampleDraw, {1, std::uint64_t(params.i), u, slot}));
            auto close = [&](std::uint32_t s, std::uint32_t y) {
                return static_cast<double>(lt.from(s, lt.landmark(y))) <= radius;
            };
            const std::size_t at = static_cast<std::size_t>(uu) * out.slots + slot;
            out.sets[at] = detail::iterate_rounds(cand, member[slot], out.per_round, rng, close,
                                                  out.rounds_used[at]);
        }
    });
    return out;
}

// Lemma-style set reduction: S' = { s in S : d(s,r) <= radius for all r in R }.
inline std::vector<Vertex> setreduce_check(std::span<const Vertex> S, std::span<const Vertex> R,
                                           Weight radius, const DirectedGraph& g) {
    std::vector<Vertex> sorted(S.begin(), S.end());
    std::sort(sorted.begin(), sorted.end());
    for (Vertex r : R)
        if (!std::binary_search(sorted.begin(), sorted.end(), r))
            throw Error(Errc::SampleNotSubset, "sample vertex " + std::to_string(r) + " not in S");
    std::vector<bool> keep(g.n(), true);
    for (Vertex r : R) {
        ShortestPathTree to_r = shortest_paths(g, r, Direction::In);
        for (Vertex s : S)
            if (to_r.dist[s] > radius) keep[s] = false;
    }
    std::vector<Vertex> out;
    for (Vertex s : S)
        if (keep[s]) out.push_back(s);
    return out;
}

// c >= 100 / log(10/9) from the set-reduction statement.
inline std::size_t setreduce_constant() {
    return static_cast<std::size_t>(std::ceil(100.0 / std::log(10.0 / 9.0)));
}

}  // namespace girthkit

#endif  // GIRTHKIT_SAMPLING_HPP
