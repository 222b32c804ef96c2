#ifndef GIRTHKIT_COMMON_HPP
#define GIRTHKIT_COMMON_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace girthkit {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::int64_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Strictly greater than n*M for every graph we can hold in memory.
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max() / 4;

constexpr Weight saturating_add(Weight a, Weight b) noexcept {
    if (a >= kInfinity || b >= kInfinity) return kInfinity;
    Weight s = a + b;
    return s >= kInfinity ? kInfinity : s;
}

constexpr bool is_finite(Weight w) noexcept { return w < kInfinity; }

enum class Errc {
    SelfLoop,
    DuplicateEdge,
    NonPositiveWeight,
    VertexOutOfRange,
    InvalidParameters,
    ParseError,
    NotAClosedWalk,
    CapExceeded,
    NotASubgraph,
    SampleNotSubset,
    InvalidEpsilon,
    Acyclic,
    InvalidK,
    NoSplitFound,
    IoError,
};

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::NonPositiveWeight: return "NonPositiveWeight";
        case Errc::VertexOutOfRange: return "VertexOutOfRange";
        case Errc::InvalidParameters: return "InvalidParameters";
        case Errc::ParseError: return "ParseError";
        case Errc::NotAClosedWalk: return "NotAClosedWalk";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::NotASubgraph: return "NotASubgraph";
        case Errc::SampleNotSubset: return "SampleNotSubset";
        case Errc::InvalidEpsilon: return "InvalidEpsilon";
        case Errc::Acyclic: return "Acyclic";
        case Errc::InvalidK: return "InvalidK";
        case Errc::NoSplitFound: return "NoSplitFound";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(Errc::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Natural-log based "log n" used by every sampling constant; never below 1.
inline double log_n(std::size_t n) {
    return std::max(1.0, std::log(static_cast<double>(std::max<std::size_t>(n, 2))));
}

// Smallest d with q^d >= x (x >= 1, q >= 2).
inline unsigned ceil_log(std::uint64_t x, std::uint64_t q) {
    unsigned d = 0;
    std::uint64_t p = 1;
    while (p < x) {
        p *= q;
        ++d;
    }
    return d;
}

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

// Worker count: explicit value, else GIRTHKIT_THREADS, else 1.
inline unsigned resolve_threads(unsigned requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("GIRTHKIT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

// Runs fn(i) for i in [0, count). Output must be written to slot i only, so
// the result never depends on the schedule.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1u, threads);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < count; i += threads) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace girthkit

#endif  // GIRTHKIT_COMMON_HPP
