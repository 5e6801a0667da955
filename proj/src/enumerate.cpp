#include <staircase/enumerate.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include <staircase/closure.hpp>

namespace staircase
{

PartitionStream::PartitionStream(Part n, std::optional<std::size_t> max_parts, std::optional<Part> max_part)
    : m_n(n), m_max_parts(max_parts.value_or(std::numeric_limits<std::size_t>::max())),
      m_max_part(std::min(max_part.value_or(n), n))
{
    if (n < 0) {
        throw std::invalid_argument("partition weight must be non-negative");
    }
}

bool PartitionStream::fill(Part remaining, Part cap)
{
    while (remaining > 0 && m_parts.size() < m_max_parts) {
        const auto p = std::min(cap, remaining);
        m_parts.push_back(p);
        remaining -= p;
    }
    return remaining == 0;
}

bool PartitionStream::advance()
{
    if (m_done) {
        return false;
    }
    if (!m_started) {
        m_started = true;
        if (m_max_part <= 0 && m_n > 0) {
            m_done = true;
            return false;
        }
        if (!fill(m_n, m_max_part)) {
            m_done = true;
            m_parts.clear();
            return false;
        }
        return true;
    }
    // Rightmost part that can drop by one with the freed weight refilled to its right.
    Part suffix = 0;
    for (std::size_t i = m_parts.size(); i-- > 0;) {
        suffix += m_parts[i];
        if (m_parts[i] < 2) {
            continue;
        }
        const Part value = m_parts[i] - 1;
        const Part remaining = suffix - value;
        // The freed weight must fit into the slots after i, each holding at most `value`.
        const bool unbounded = m_max_parts == std::numeric_limits<std::size_t>::max();
        const auto slots = unbounded ? remaining : static_cast<Part>(m_max_parts - (i + 1));
        if ((remaining + value - 1) / value <= slots) {
            m_parts[i] = value;
            m_parts.resize(i + 1);
            fill(remaining, value);
            return true;
        }
    }
    m_done = true;
    m_parts.clear();
    return false;
}

std::optional<Partition> PartitionStream::next()
{
    if (!advance()) {
        return std::nullopt;
    }
    return Partition(std::vector<Part>(m_parts.begin(), m_parts.end()));
}

PartitionStream enumerate_partitions(Part n, std::optional<std::size_t> r)
{
    return PartitionStream(n, r);
}

std::vector<BigInt> partition_counts(std::size_t max_n, std::optional<std::size_t> r)
{
    std::vector<BigInt> p(max_n + 1);
    p[0] = 1;
    if (r) {
        for (std::size_t parts = 1; parts <= *r && parts <= max_n; ++parts) {
            for (std::size_t n = parts; n <= max_n; ++n) {
                p[n] += p[n - parts];
            }
        }
        return p;
    }
    for (std::size_t n = 1; n <= max_n; ++n) {
        // Generalized pentagonal numbers k(3k-1)/2 for k = 1, -1, 2, -2, ...
        for (std::size_t k = 1;; ++k) {
            const auto g1 = k * (3 * k - 1) / 2;
            if (g1 > n) {
                break;
            }
            const bool plus = k % 2 == 1;
            const auto &t1 = p[n - g1];
            plus ? p[n] += t1 : p[n] -= t1;
            const auto g2 = k * (3 * k + 1) / 2;
            if (g2 <= n) {
                const auto &t2 = p[n - g2];
                plus ? p[n] += t2 : p[n] -= t2;
            }
        }
    }
    return p;
}

BigInt count_all(std::size_t n, std::optional<std::size_t> r)
{
    return partition_counts(n, r).back();
}

namespace
{

// Depth-first search over concave prefixes. Every triple with k <= m is
// settled once m parts are fixed; the triples with k = m + 1 are settled by
// the next part, or by a zero when the prefix is closed off.
class ConcaveSearch
{
public:
    ConcaveSearch(std::size_t max_weight, std::size_t max_parts) : m_max_weight(max_weight), m_max_parts(max_parts)
    {
    }

    template <typename Visit>
    void run_from(Part first, Visit &&visit)
    {
        m_parts.assign(1, first);
        recurse(static_cast<std::size_t>(first), visit);
    }

private:
    // Triples (i, j, k) with k = m_parts.size() + 1 and lambda_k = value.
    bool closes(Part value) const
    {
        const auto k = static_cast<Part>(m_parts.size() + 1);
        for (std::size_t j = 2; j < m_parts.size() + 1; ++j) {
            const auto lj = m_parts[j - 1];
            const auto sj = static_cast<Part>(j);
            for (std::size_t i = 1; i < j; ++i) {
                const auto si = static_cast<Part>(i);
                if (m_parts[i - 1] * (sj - k) + lj * (k - si) + value * (si - sj) >= k - si) {
                    return false;
                }
            }
        }
        return true;
    }

    template <typename Visit>
    void recurse(std::size_t weight, Visit &visit)
    {
        if (closes(0)) {
            visit(m_parts, weight);
        }
        if (m_parts.size() >= m_max_parts) {
            return;
        }
        const auto cap = std::min<Part>(m_parts.back(), static_cast<Part>(m_max_weight - weight));
        for (Part v = cap; v >= 1; --v) {
            if (!closes(v)) {
                continue;
            }
            m_parts.push_back(v);
            recurse(weight + static_cast<std::size_t>(v), visit);
            m_parts.pop_back();
        }
    }

    std::size_t m_max_weight;
    std::size_t m_max_parts;
    std::vector<Part> m_parts;
};

std::vector<BigInt> to_big(const std::vector<std::uint64_t> &counts)
{
    std::vector<BigInt> out(counts.size());
    std::transform(counts.begin(), counts.end(), out.begin(), [](std::uint64_t c) { return BigInt(c); });
    return out;
}

std::vector<BigInt> pruned_counts(std::size_t max_n, std::optional<std::size_t> r)
{
    const auto max_parts = r.value_or(max_n);
    std::vector<std::uint64_t> total(max_n + 1, 0);
    total[0] = 1;
    if (max_n == 0 || max_parts == 0) {
        return to_big(total);
    }
    // Work is split by largest part; each worker owns its tally.
    const auto workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(max_n)));
    std::atomic<Part> next_first{static_cast<Part>(max_n)};
    std::vector<std::vector<std::uint64_t>> tallies(workers, std::vector<std::uint64_t>(max_n + 1, 0));
    auto work = [&](std::vector<std::uint64_t> &tally) {
        ConcaveSearch search(max_n, max_parts);
        for (Part first = next_first--; first >= 1; first = next_first--) {
            search.run_from(first, [&tally](const std::vector<Part> &, std::size_t weight) { ++tally[weight]; });
        }
    };
    if (workers == 1) {
        work(tallies[0]);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, std::ref(tallies[w]));
        }
    }
    for (const auto &tally : tallies) {
        for (std::size_t n = 0; n <= max_n; ++n) {
            total[n] += tally[n];
        }
    }
    return to_big(total);
}

std::vector<BigInt> filtered_counts(std::size_t max_n, std::optional<std::size_t> r)
{
    std::vector<std::uint64_t> counts(max_n + 1, 0);
    for (std::size_t n = 0; n <= max_n; ++n) {
        PartitionStream stream(static_cast<Part>(n), r);
        while (auto p = stream.next()) {
            counts[n] += is_concave(*p) ? 1 : 0;
        }
    }
    return to_big(counts);
}

} // namespace

std::vector<BigInt> concave_counts(std::size_t max_n, std::optional<std::size_t> r, CountMethod method)
{
    return method == CountMethod::pruned ? pruned_counts(max_n, r) : filtered_counts(max_n, r);
}

BigInt count_concave(std::size_t n, std::optional<std::size_t> r, CountMethod method)
{
    return concave_counts(n, r, method).back();
}

void for_each_concave(std::size_t max_weight, std::optional<std::size_t> r,
                      const std::function<void(const Partition &)> &visit)
{
    visit(Partition{});
    const auto max_parts = r.value_or(max_weight);
    if (max_parts == 0) {
        return;
    }
    ConcaveSearch search(max_weight, max_parts);
    for (Part first = static_cast<Part>(max_weight); first >= 1; --first) {
        search.run_from(first, [&visit](const std::vector<Part> &parts, std::size_t) { visit(Partition(parts)); });
    }
}

unsigned worker_count()
{
    unsigned requested = 0;
    if (const char *env = std::getenv("STAIRCASE_THREADS")) {
        try {
            requested = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception &) {
            requested = 0;
        }
    }
    if (requested == 0) {
        requested = std::max(1u, std::thread::hardware_concurrency());
    }
    return requested;
}

} // namespace staircase
