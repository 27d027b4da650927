#include "cimod/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

#include "cimod/errors.hpp"

namespace cimod {
namespace {

using Tuple = std::vector<Degree>;
using BucketMap = std::unordered_map<SearchKey, std::vector<Tuple>, SearchKeyHash>;

std::size_t mix(std::size_t h, std::size_t v)
{
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

// Enumerates one shard (fixed leading degree) with incrementally updated keys.
class ShardEnumerator {
public:
    ShardEnumerator(const SearchParams& params, const std::vector<std::vector<BigInt>>& powers,
                    BucketMap& buckets)
        : params_(params), powers_(powers), buckets_(buckets), tuple_(params.r),
          keys_(params.r + 1)
    {
        keys_[0].product = 1;
        keys_[0].sums.assign(params.k, BigInt(0));
    }

    void run(Degree leading) { place(0, leading, leading); }

private:
    void place(unsigned depth, Degree from, Degree to)
    {
        for (Degree x = to; x >= from; --x) {
            tuple_[depth] = x;
            const SearchKey& prev = keys_[depth];
            SearchKey& next = keys_[depth + 1];
            next.product = prev.product * static_cast<unsigned long>(x);
            next.sums.resize(params_.k);
            const auto& px = powers_[static_cast<std::size_t>(x - params_.lo)];
            for (unsigned i = 0; i < params_.k; ++i) {
                next.sums[i] = prev.sums[i] + px[i];
            }
            if (depth + 1 == params_.r) {
                buckets_[next].push_back(tuple_);
            } else {
                place(depth + 1, params_.lo, x);
            }
        }
    }

    const SearchParams& params_;
    const std::vector<std::vector<BigInt>>& powers_;
    BucketMap& buckets_;
    Tuple tuple_;
    std::vector<SearchKey> keys_;
};

} // namespace

std::size_t SearchKeyHash::operator()(const SearchKey& key) const noexcept
{
    std::size_t h = mpz_get_ui(key.product.get_mpz_t());
    for (const auto& s : key.sums) {
        h = mix(h, mpz_get_ui(s.get_mpz_t()));
    }
    return h;
}

SearchKey search_key(std::span<const Degree> degrees, unsigned k)
{
    SearchKey key;
    key.product = 1;
    key.sums.assign(k, BigInt(0));
    for (const Degree d : degrees) {
        const BigInt x = static_cast<unsigned long>(d);
        key.product *= x;
        BigInt p = 1;
        for (unsigned i = 0; i < k; ++i) {
            p *= x;
            key.sums[i] += p;
        }
    }
    return key;
}

PairReport verify_pair(const Multidegree& a, const Multidegree& b, unsigned k)
{
    if (k < 1) {
        throw ValidationError("power-sum depth k must be at least 1");
    }
    PairReport r{a, b, k, false};
    if (a == b) {
        return r;
    }
    if (total_degree(a) != total_degree(b)) {
        return r;
    }
    for (unsigned i = 1; i <= k; ++i) {
        if (power_sum(a, i) != power_sum(b, i)) {
            return r;
        }
    }
    r.verified = true;
    return r;
}

BigInt enumeration_size(unsigned r, Degree lo, Degree hi)
{
    if (hi < lo) {
        return 0;
    }
    return binom(hi - lo + static_cast<std::int64_t>(r), static_cast<std::int64_t>(r));
}

std::vector<PairReport> find_pairs(const SearchParams& params)
{
    if (params.k < 1) {
        throw ValidationError("power-sum depth k must be at least 1");
    }
    if (params.r < params.k + 2) {
        throw ValidationError("r = " + std::to_string(params.r) + " < k + 2 = " +
                              std::to_string(params.k + 2) +
                              ": by Newton's identities the product and s_1..s_k determine the "
                              "multiset, so no distinct pairs exist");
    }
    if (params.lo < 2) {
        throw ValidationError("lo must be at least 2");
    }
    if (params.lo > params.hi) {
        throw ValidationError("lo must not exceed hi");
    }
    const BigInt size = enumeration_size(params.r, params.lo, params.hi);
    if (size > params.budget) {
        throw BudgetExceeded("enumeration size " + size.get_str() + " exceeds budget " +
                                 params.budget.get_str(),
                             size.get_str());
    }

    std::vector<std::vector<BigInt>> powers;
    for (Degree x = params.lo; x <= params.hi; ++x) {
        std::vector<BigInt> px(params.k);
        BigInt p = 1;
        for (unsigned i = 0; i < params.k; ++i) {
            p *= static_cast<unsigned long>(x);
            px[i] = p;
        }
        powers.push_back(std::move(px));
    }

    const auto shard_count = static_cast<std::size_t>(params.hi - params.lo + 1);
    unsigned workers = params.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                           : params.threads;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, shard_count));

    std::vector<BucketMap> local(workers);
    std::atomic<std::size_t> next_shard{0};
    auto work = [&](unsigned w) {
        ShardEnumerator shard(params, powers, local[w]);
        for (std::size_t s = next_shard++; s < shard_count; s = next_shard++) {
            const Degree leading = params.lo + static_cast<Degree>(s);
            shard.run(leading);
            if (params.progress) {
                params.progress("shard leading=" + std::to_string(leading) + " done");
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }

    BucketMap merged = std::move(local[0]);
    for (unsigned w = 1; w < workers; ++w) {
        for (auto& [key, tuples] : local[w]) {
            auto& dst = merged[key];
            dst.insert(dst.end(), std::make_move_iterator(tuples.begin()),
                       std::make_move_iterator(tuples.end()));
        }
    }

    std::vector<PairReport> out;
    for (auto& [key, tuples] : merged) {
        if (tuples.size() < 2) {
            continue;
        }
        std::sort(tuples.begin(), tuples.end());
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            for (std::size_t j = i + 1; j < tuples.size(); ++j) {
                out.push_back(verify_pair(Multidegree::make(tuples[i]), Multidegree::make(tuples[j]),
                                          params.k));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const PairReport& x, const PairReport& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return out;
}

} // namespace cimod
