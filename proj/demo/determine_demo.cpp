// Minimal library walkthrough: parse a polynomial, scan primes, print the
// verdict and the observed type frequencies.

#include <iostream>

#include <galid/galid.hpp>

int main() {
    const galid::IntPoly c = galid::parse_poly("x^3 - 2");

    galid::DetermineOptions opts;
    opts.prime_limit = 200;
    const galid::DeterminationReport rep = galid::determine(c, opts);

    std::cout << "polynomial " << galid::to_expression_string(c) << ", disc " << rep.disc << "\n";
    std::cout << "observed types:";
    for (const galid::FactorType& t : rep.observed_types) std::cout << " " << t;
    std::cout << "\n";
    if (rep.verdict.kind == galid::VerdictKind::conclusive)
        std::cout << "Galois group: " << rep.verdict.group << "\n";

    const auto freq = galid::frequency_report(c, 10000);
    for (const auto& [t, f] : freq.frequencies)
        std::cout << t << ": " << f.count << "/" << freq.observed_primes << "\n";
    return 0;
}
