// Walkthrough: analyze the S^4 sphere form, put the Veronese surface on it,
// and classify a few quadratic maps.

#include "quadrica/cli.hpp"

#include <iostream>

using namespace quadrica;

int main() {
    QuadraticForm sphere = QuadraticForm::diagonal({-1, 1, 1, 1, 1, 1});
    std::cout << "S^4 form x1^2+...+x5^2 - x0^2\n";
    std::cout << "  discriminant: " << discriminant(sphere).representative << "\n";
    auto w = witt_decompose(sphere);
    std::cout << "  witt index:   " << w.witt_index << "\n  kernel:      ";
    for (const Rat& d : w.kernel_diagonal) std::cout << " " << d;
    std::cout << "\n\n";

    // the rational Veronese surface on the sphere (variant 7)
    QuadraticMap v = construct_sphere_veronese(7);
    std::cout << "sphere Veronese (variant 7):\n";
    for (const auto& c : v.coords) std::cout << "  " << c << "\n";
    std::cout << "  on the quadric: " << (verify_on_quadric(*v.target, v) ? "yes" : "no") << "\n";
    std::cout << "  class: " << classify(v).label << "\n\n";

    // a projection of the Veronese drops onto a singular quartic
    QuadraticMap proj;
    for (const char* s : {"u^2", "v^2", "w^2", "u*v", "v*w"}) proj.coords.push_back(parse_poly(s));
    MapClass c = classify(proj);
    std::cout << "projection (u^2:v^2:w^2:uv:vw): " << c.label
              << ", center rank " << *c.center_rank << "\n";

    // all real solutions of x1^2+...+x5^2 = x0^2 with quadratic polynomials
    // come from the two Veronese families; count them by signature
    std::cout << "Veronese families on signature (5,1): "
              << real_veronese_family_count(5, 1) << "\n";
    return 0;
}
