// E6 with beta = 1, alpha0 = 2, alpha1 = 3: the lowered Y-weight for a range
// of a1 and the resulting cohomology of both normal bundles.
#include <iostream>

#include "hororigid/hororigid.hpp"

using namespace hororigid;

int main() {
    const auto rs = make_root_system("E6");
    HorosphericalDatum d{rs, 0, RootRef::concrete(1), RootRef::concrete(2), 0, std::string("V.1")};
    std::cout << "lowered Y-weight: " << symbolic_lowered(d, Orbit::Y) << "\n";
    for (int a1 = 0; a1 <= 4; ++a1) {
        d.a1 = a1;
        const auto r = rigidity_report(d);
        std::cout << "a1=" << a1 << "  Y: " << format_cohomology(rs, r.Y.result) << "  Z: " << format_cohomology(rs, r.Z.result)
                  << "  " << (r.locally_rigid ? "locally rigid" : "not rigid") << "\n";
    }
}
