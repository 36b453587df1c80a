#include "qmech/linop.hpp"

namespace qmech {

int Basis2::index(int a, int b) const {
    if (a < 0 || b < 0 || a + b > truncation)
        throw DegreeOverflowError("monomial outside the truncated basis");
    int d = a + b;
    return d * (d + 1) / 2 + b;
}

std::pair<int, int> Basis2::exponents(int index) const {
    int d = 0;
    while ((d + 1) * (d + 2) / 2 <= index) ++d;
    int b = index - d * (d + 1) / 2;
    return {d - b, b};
}

}  // namespace qmech
