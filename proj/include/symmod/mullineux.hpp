#pragma once

// The Mullineux involution lambda -> lambda^M, D^lambda (x) sgn = D^{lambda^M},
// computed by the crystal recursion
//
//     M(empty) = empty,   M(lambda) = f~_{-i} M(e~_i lambda)
//
// where i is the smallest residue with epsilon_i(lambda) > 0.

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "crystal.hpp"

namespace symmod {

namespace detail {

struct mullineux_key {
    int p;
    Partition lambda;
    friend bool operator==(const mullineux_key&, const mullineux_key&) = default;
};

struct mullineux_key_hash {
    std::size_t operator()(const mullineux_key& k) const noexcept {
        return partition_hash{}(k.lambda) * 31 + static_cast<std::size_t>(k.p);
    }
};

/// Concurrent reads, atomic inserts. Racing writers compute the same value.
class mullineux_cache {
public:
    std::optional<Partition> find(const mullineux_key& key) const {
        std::shared_lock lock(mutex_);
        auto it = table_.find(key);
        if (it == table_.end())
            return std::nullopt;
        return it->second;
    }

    void insert(mullineux_key key, Partition value) {
        std::unique_lock lock(mutex_);
        table_.try_emplace(std::move(key), std::move(value));
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<mullineux_key, Partition, mullineux_key_hash> table_;
};

inline mullineux_cache& global_mullineux_cache() {
    static mullineux_cache cache;
    return cache;
}

} // namespace detail

inline void clear_mullineux_cache() { detail::global_mullineux_cache().clear(); }

inline Partition mullineux(const Partition& lambda, PrimeChar p) {
    require_regular(lambda, p);
    if (lambda.empty() || p.value() == 2)
        return lambda;
    auto& cache = detail::global_mullineux_cache();

    // Walk down a chain of good-node removals, then climb back up with f~_{-i},
    // caching every intermediate image on the way.
    std::vector<std::pair<Partition, ResidueClass>> chain;
    Partition current = lambda;
    Partition image;
    for (;;) {
        if (current.empty())
            break;
        if (auto hit = cache.find({p.value(), current})) {
            image = *hit;
            break;
        }
        for (int i = 0; i < p.value(); ++i) {
            ResidueClass r(i, p);
            if (auto mu = e_tilde(current, r, p)) {
                chain.emplace_back(current, r);
                current = std::move(*mu);
                break;
            }
        }
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        auto next = f_tilde(image, -it->second, p);
        if (!next)
            throw std::logic_error("Mullineux recursion: f~ undefined while lifting " + it->first.to_string());
        image = std::move(*next);
        cache.insert({p.value(), it->first}, image);
    }
    return image;
}

/// lambda_1 >= p-1 and the concatenation (lambda_1)^M followed by
/// (lambda_2, lambda_3, ...)^M is a p-regular partition.
inline bool first_row_condition(const Partition& lambda, PrimeChar p) {
    require_regular(lambda, p);
    require_nonempty(lambda);
    if (lambda.first() < p.value() - 1)
        return false;
    auto head = mullineux(Partition{lambda.first()}, p);
    auto rest = mullineux(lambda.tail(), p);
    std::vector<int> joined(head.parts().begin(), head.parts().end());
    joined.insert(joined.end(), rest.parts().begin(), rest.parts().end());
    if (!std::is_sorted(joined.rbegin(), joined.rend()))
        return false;
    return is_p_regular(Partition(std::move(joined)), p);
}

} // namespace symmod
