// Walkthrough: the two average-order constants, a closed-form c_g,
// and the series cross-check.

#include <iostream>

#include "mulord/constants.hpp"
#include "mulord/report.hpp"

using namespace mulord;

int main() {
    auto b = euler_product_B(1000000);
    std::cout << "B   = " << certified_decimal(b.value, b.tail_bound)
              << "  (cutoff 1e6, tail " << bound_str(b.tail_bound) << ")\n";

    auto c = euler_product_c(1000000);
    std::cout << "c   = " << certified_decimal(c.value, c.tail_bound)
              << "  (cutoff 1e6, tail " << bound_str(c.tail_bound) << ")\n";

    GDecomposition d2 = decompose(parse_g("2"));
    CgValue cf = cg_closed_form(d2, 1000000);
    std::cout << "c_2 = " << certified_decimal(cf.value, cf.tail_bound) << "  (= " << cf.multiplier
              << " * c)\n";

    CgValue sv = cg_series(d2, 100000);
    std::cout << "      series cross-check at K=1e5: " << real_str(sv.value, 12)
              << " (tail bound " << bound_str(sv.tail_bound) << ")\n";
    return 0;
}
