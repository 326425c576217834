// Walks through the quadruple w = (2,7,9), N = 9, L = GL2 x GL5 x GL2:
// heads, degree-2 decomposition and the classification verdict.

#include <iostream>

#include "spherical/spherical.hpp"

using namespace spherical;

int main() {
    const Quadruple q(GrassWord({2, 7, 9}, 9), LeviBlocks({2, 5, 2}));
    std::cout << "h = " << to_string(h_vector(q)) << "\n";

    std::cout << "degree-1 heads:\n";
    for (const auto& h : enumerate_heads(q))
        std::cout << "  " << to_string(h) << " = " << to_string(theta_word(h, q.blocks())) << "\n";

    const Decomposition dec = decompose_degree(q, 2);
    std::cout << "degree-2 decomposition:\n";
    for (const auto& [label, m] : dec.terms) std::cout << "  " << to_string(label) << ": " << m << "\n";
    std::cout << "dimension " << dec.dimension(q.blocks()) << " (standard monomials "
              << count_standard_monomials(q.w(), 2) << ")\n";

    const ClassificationResult c = classify(q);
    std::cout << "verdict: " << to_string(c.verdict) << " via " << to_string(c.route) << "\n";
}
