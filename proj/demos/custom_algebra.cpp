// Build a star algebra by hand, inspect its graph, and run the full
// necessary-condition report -- the programmatic equivalent of
// `starquiver report --input my_algebra.json`.
#include "starquiver/commands.hpp"

#include <iostream>

using namespace starquiver;

int main() {
    // K S_(4,4) modulo the eight relations whose non-relation pattern is an
    // 8-cycle; this is the classified (4,2,4,2) algebra.
    StarAlgebra lambda(4, 4, {{1, 3}, {1, 4}, {2, 1}, {2, 4},
                              {3, 1}, {3, 2}, {4, 2}, {4, 3}});

    const BipartiteGraph b = b_lambda(lambda);
    std::cout << "B graph: " << b.r() << "+" << b.s() << " vertices, "
              << b.edge_count() << " edges\n";
    std::cout << graph_to_dot(b, "B") << "\n";

    const CoxeterReport rep = coxeter_report(lambda);
    std::cout << "Coxeter polynomial: " << rep.coxeter_poly.str() << "\n";
    std::cout << "order(-Phi_Gamma): " << rep.neg_phi_order.str() << "\n";

    std::cout << cmd_report(lambda).dump(2) << "\n";
    return 0;
}
