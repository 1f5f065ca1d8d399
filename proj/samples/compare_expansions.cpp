// Expands a rational three ways and prints the terms and convergents.
//
//   compare_expansions 355/113

#include <iostream>
#include <string>

#include "tietze/tietze.hpp"

int main(int argc, char** argv) {
    using namespace tietze;

    auto x = Rational::parse(argc > 1 ? argv[1] : "355/113");
    if (!x) {
        std::cerr << "usage: compare_expansions <rational>\n";
        return 2;
    }
    for (auto algo : {ExpansionAlgo::Regular, ExpansionAlgo::Negative, ExpansionAlgo::NearestInteger}) {
        SemiRegularCF cf = expand(algo, *x);
        std::size_t len = *cf.length();
        std::cout << to_string(algo) << " (" << len << " terms): " << cf.b0();
        for (const Term& t : cf.prefix()) {
            std::cout << (t.a == Sign::Plus ? " + 1/" : " - 1/") << t.b;
        }
        std::cout << "\n  convergents:";
        for (const auto& s : states_through(cf, len)) {
            std::cout << " " << s.value();
        }
        std::cout << "\n";
    }
}
