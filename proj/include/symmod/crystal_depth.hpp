#pragma once

#include <set>

#include "mullineux.hpp"

namespace symmod {

/// Shortest chain of good-node removals (any residues) from lambda to a label
/// of a one-dimensional module, (m) or (m)^M. Breadth-first over e~_i images.
/// This bounds from above the least a for which the restriction of D^lambda to
/// S_{n-a} has a one-dimensional submodule.
inline int a_crystal(const Partition& lambda, PrimeChar p) {
    require_regular(lambda, p);
    require_nonempty(lambda);
    std::set<Partition> level{lambda};
    for (int depth = 1;; ++depth) {
        std::set<Partition> next;
        for (const auto& kappa : level)
            for (int i = 0; i < p.value(); ++i)
                if (auto mu = e_tilde(kappa, ResidueClass(i, p), p))
                    next.insert(std::move(*mu));
        int m = lambda.size() - depth;
        Partition trivial = m > 0 ? Partition{m} : Partition();
        if (next.contains(trivial) || next.contains(mullineux(trivial, p)))
            return depth;
        level = std::move(next);
    }
}

} // namespace symmod
