// SL2 x {1} x C*: the surfaces whose tangent cohomology grows like a1 - 1.
#include <iostream>

#include "hororigid/hororigid.hpp"

using namespace hororigid;

int main() {
    const auto rs = make_root_system("A1x-xC*");
    for (int a1 = 0; a1 <= 6; ++a1) {
        HorosphericalDatum d{rs, 0, RootRef::none(), RootRef::none(), a1, std::nullopt};
        const auto r = rigidity_report(d);
        std::cout << "a1=" << a1 << "  h1=" << r.h1_total_dim << "  h2=" << r.h2_total_dim << "  " << fano_name(r.fano.status)
                  << "\n";
    }
}
