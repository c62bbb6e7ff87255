// Longest parabolic words and the cohomology of small line bundles on G/B.
#include <iostream>

#include "hororigid/hororigid.hpp"

using namespace hororigid;

int main(int argc, char** argv) {
    const std::string group = argc > 1 ? argv[1] : "A2";
    const auto rs = make_root_system(group);
    const auto w0 = longest_parabolic_word(rs, ParabolicSpec::whole(rs));
    std::cout << group << ": |R+| = " << rs.positive_roots().size() << ", w0 has length " << w0.length() << "\n";
    std::cout << "w0(rho) = " << format_weight(apply_word(rs, w0, rho(rs))) << "\n";
    for (int j = 0; j < rs.rank(); ++j) {
        for (int k : {-2, -1, 1}) {
            auto lam = zero_weight(rs);
            lam[j] = k;
            std::cout << "O(" << format_weight(lam) << "): " << format_cohomology(rs, section_cohomology(rs, ParabolicSpec::borel(), lam))
                      << "\n";
        }
    }
}
