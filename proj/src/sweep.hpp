#pragma once

// Gray-code codeword sweeps over the message space of a linear code.
//
// Messages are visited in modular base-b Gray order, where b is a prime and
// each row generates a cyclic group of order b under addition. Message index i
// with base-b digits d_0..d_{K-1} maps to Gray digits g_m = d_m - d_{m+1}
// (mod b). Incrementing i bumps exactly one Gray digit (the lowest digit of i
// that is not b-1) by +1, so every step adds one row to the running word.
// The index range is split into b^t chunks by the top t digits of i; chunks
// are independent and their histograms are summed.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "symgrass/linalg.hpp"

namespace symgrass::detail {

using Histogram = std::vector<std::uint64_t>;

/// Rows packed one bit per coordinate.
struct Gf2Rows {
    std::size_t words;
    std::vector<std::uint64_t> rows;  // K * words

    explicit Gf2Rows(const Matrix& g) : words((g.cols() + 63) / 64), rows(g.rows() * words, 0) {
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t c = 0; c < g.cols(); ++c)
                if (g(r, c)) rows[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
    }
    std::size_t state_size() const { return words; }
    void add_row(std::uint64_t* acc, std::size_t r) const {
        const std::uint64_t* src = &rows[r * words];
        for (std::size_t w = 0; w < words; ++w) acc[w] ^= src[w];
    }
    std::uint64_t weight(const std::uint64_t* acc) const {
        std::uint64_t s = 0;
        for (std::size_t w = 0; w < words; ++w) s += static_cast<std::uint64_t>(std::popcount(acc[w]));
        return s;
    }
};

/// GF(3) bitsliced: word pair (ones, twos) marks coordinates equal to 1 and 2.
struct Gf3Rows {
    std::size_t words;
    std::vector<std::uint64_t> rows;  // K * 2 * words, ones then twos

    explicit Gf3Rows(const Matrix& g) : words((g.cols() + 63) / 64), rows(g.rows() * 2 * words, 0) {
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t c = 0; c < g.cols(); ++c) {
                Elem x = g(r, c);
                if (x == 0) continue;
                std::size_t plane = x == 1 ? 0 : words;
                rows[r * 2 * words + plane + c / 64] |= std::uint64_t{1} << (c % 64);
            }
    }
    std::size_t state_size() const { return 2 * words; }

    static void add(std::uint64_t& a1, std::uint64_t& a2, std::uint64_t b1, std::uint64_t b2) {
        const std::uint64_t az = ~(a1 | a2), bz = ~(b1 | b2);
        // 1 = 1+0 = 0+1 = 2+2;  2 = 2+0 = 0+2 = 1+1
        const std::uint64_t r1 = (a1 & bz) | (b1 & az) | (a2 & b2);
        const std::uint64_t r2 = (a2 & bz) | (b2 & az) | (a1 & b1);
        a1 = r1;
        a2 = r2;
    }
    void add_row(std::uint64_t* acc, std::size_t r) const {
        const std::uint64_t* src = &rows[r * 2 * words];
        for (std::size_t w = 0; w < words; ++w) add(acc[w], acc[words + w], src[w], src[words + w]);
    }
    std::uint64_t weight(const std::uint64_t* acc) const {
        std::uint64_t s = 0;
        for (std::size_t w = 0; w < words; ++w)
            s += static_cast<std::uint64_t>(std::popcount(acc[w] | acc[words + w]));
        return s;
    }
};

/// One byte per coordinate, table-driven addition (XOR in characteristic 2).
struct ByteRows {
    const Field* field;
    std::size_t n;
    std::size_t lanes;
    std::vector<std::uint64_t> rows;  // bytes stored in 64-bit lanes, K * lanes

    explicit ByteRows(const Matrix& g)
        : field(&g.field()), n(g.cols()), lanes((g.cols() + 7) / 8), rows(g.rows() * lanes, 0) {
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t c = 0; c < g.cols(); ++c)
                rows[r * lanes + c / 8] |= std::uint64_t{g(r, c)} << (8 * (c % 8));
    }
    std::size_t state_size() const { return lanes; }
    void add_row(std::uint64_t* acc, std::size_t r) const {
        const std::uint64_t* src = &rows[r * lanes];
        if (field->characteristic_two()) {
            for (std::size_t w = 0; w < lanes; ++w) acc[w] ^= src[w];
            return;
        }
        auto* a = reinterpret_cast<unsigned char*>(acc);
        const auto* b = reinterpret_cast<const unsigned char*>(src);
        const Elem* tab = field->add_row(0);
        for (std::size_t c = 0; c < lanes * 8; ++c) a[c] = tab[a[c] * 16 + b[c]];
    }
    std::uint64_t weight(const std::uint64_t* acc) const {
        const auto* a = reinterpret_cast<const unsigned char*>(acc);
        std::uint64_t s = 0;
        for (std::size_t c = 0; c < n; ++c) s += a[c] != 0;
        return s;
    }
};

struct SweepControl {
    std::optional<std::uint64_t> early_exit_bound;
    std::atomic<bool> stop{false};
};

/// Histogram of weights over message indices [chunk * q^low, (chunk+1) * q^low).
template <class Rows>
void sweep_chunk(const Rows& rows, int q, std::size_t K, std::size_t low, std::uint64_t chunk,
                 Histogram& hist, SweepControl& ctl) {
    std::vector<std::uint64_t> acc(rows.state_size(), 0);

    // Gray digits of the chunk's first index (its low digits are all zero).
    std::vector<int> d(K + 1, 0);
    std::uint64_t top = chunk;
    for (std::size_t m = low; m < K; ++m) {
        d[m] = static_cast<int>(top % static_cast<std::uint64_t>(q));
        top /= static_cast<std::uint64_t>(q);
    }
    for (std::size_t m = 0; m < K; ++m) {
        int g = ((d[m] - d[m + 1]) % q + q) % q;
        for (int t = 0; t < g; ++t) rows.add_row(acc.data(), m);
    }

    auto record = [&](std::uint64_t w) {
        ++hist[w];
        if (ctl.early_exit_bound && w > 0 && w <= *ctl.early_exit_bound)
            ctl.stop.store(true, std::memory_order_relaxed);
    };
    record(rows.weight(acc.data()));

    std::vector<int> counter(low, 0);
    std::uint64_t steps = 1;
    for (std::size_t i = 0; i < low; ++i) steps *= static_cast<std::uint64_t>(q);
    for (std::uint64_t s = 1; s < steps; ++s) {
        std::size_t p = 0;
        while (counter[p] == q - 1) counter[p++] = 0;
        ++counter[p];
        rows.add_row(acc.data(), p);
        record(rows.weight(acc.data()));
        if ((s & 0x3ff) == 0 && ctl.stop.load(std::memory_order_relaxed)) return;
    }
}

/// Runs all chunks on `threads` workers and merges the histograms.
template <class Rows>
Histogram sweep_all(const Rows& rows, int q, std::size_t K, std::size_t N, unsigned threads,
                    SweepControl& ctl) {
    threads = std::max(1u, threads);
    // Enough chunks to balance the workers; the merged result is independent of this split.
    std::size_t top = 0;
    std::uint64_t chunks = 1;
    while (top < K && threads > 1 && chunks < 8ull * threads) {
        ++top;
        chunks *= static_cast<std::uint64_t>(q);
    }
    const std::size_t low = K - top;

    std::vector<Histogram> partial(threads, Histogram(N + 1, 0));
    std::atomic<std::uint64_t> next{0};
    auto worker = [&](unsigned id) {
        while (!ctl.stop.load(std::memory_order_relaxed)) {
            std::uint64_t c = next.fetch_add(1);
            if (c >= chunks) return;
            sweep_chunk(rows, q, K, low, c, partial[id], ctl);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    Histogram total(N + 1, 0);
    for (const auto& h : partial)
        for (std::size_t w = 0; w <= N; ++w) total[w] += h[w];
    return total;
}

}  // namespace symgrass::detail
