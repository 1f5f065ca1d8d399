// Certified approximations of the golden ratio 1 + 1/(1 + 1/(1 + ...)) and of
// the all-minus fraction 2 - 1/(2 - 1/(2 - ...)) = 1.

#include <iostream>

#include "tietze/tietze.hpp"

int main() {
    using namespace tietze;

    auto golden = SemiRegularCF::generated(1, [](std::size_t) { return Term{Sign::Plus, 1}; });
    auto minus_twos = SemiRegularCF::generated(2, [](std::size_t) { return Term{Sign::Minus, 2}; });

    for (int digits : {2, 6, 12}) {
        Rational eps(1, 1);
        for (int i = 0; i < digits; ++i) {
            eps /= 10;
        }
        EvalResult g = evaluate(golden, eps);
        std::cout << "golden  eps=" << eps << "  n=" << g.steps_used << "  approx=" << g.approximation
                  << " (" << g.approximation.to_decimal(14) << ")  error<=" << g.certified_error << "\n";
    }

    EvalResult m = evaluate(minus_twos, Rational(1, 1000));
    std::cout << "minus   eps=1/1000  n=" << m.steps_used << "  approx=" << m.approximation
              << "  error<=" << m.certified_error << "\n";

    ErrorCertificate c = certify(golden, 10);
    std::cout << "golden certificate at n=10: anchor m=" << *c.anchor << ", bound " << c.bound
              << " <= 2/q_m^2 = " << *c.coarse_bound << "\n";
}
