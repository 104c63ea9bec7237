// Walks through the main entry points on a few small partitions.

#include <iostream>

#include "symmod/symmod.hpp"

int main() {
    using namespace symmod;

    PrimeChar p(3);
    Partition lambda{5, 1};

    std::cout << "lambda = " << lambda << ", p = " << p.value() << '\n';
    std::cout << "  JS: " << std::boolalpha << is_js(lambda, p) << '\n';
    for (const auto& [mu, mult] : restriction_factors(lambda, p).entries)
        std::cout << "  restriction factor " << mu << " x" << mult << '\n';
    std::cout << "  Mullineux image: " << mullineux(lambda, p) << '\n';

    auto module = irreducible_action(lambda, p);
    std::cout << "  dim D^lambda = " << module.dim << ", a = " << minimal_a_of(module)
              << " (crystal upper bound " << a_crystal(lambda, p) << ")\n";

    auto report = best_lower_bound(lambda, p, AMode::oracle, minimal_a_of(module));
    std::cout << "  best certified lower bound: " << report.best.to_string() << " from " << report.best_tag << '\n';

    Partition big{8, 2, 1, 1};
    if (auto a = theorem_A_bound(big, p))
        std::cout << "C^3_4(12) for " << big << ": " << *a << '\n';
    return 0;
}
