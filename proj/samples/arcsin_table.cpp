// Coefficients of (arcsin t / t)^m for small m, next to the same series
// computed by raising the arcsin series to the m-th power.

#include <iostream>

#include <series_forge.hpp>

using namespace series_forge;

int main()
{
    constexpr int order = 10;
    for (int m = 1; m <= 4; ++m) {
        const ExpansionSpec spec{Family::ArcsinPow, m, order};
        const auto theorem = std::get<Series<Rational>>(theorem_series(spec));
        const auto oracle = std::get<Series<Rational>>(oracle_series(spec));
        std::cout << "m = " << m << (theorem == oracle ? "  (matches)" : "  (MISMATCH)") << "\n";
        for (int i = 0; i <= order; i += 2) {
            std::cout << "  t^" << i << "  " << theorem[i] << "\n";
        }
    }

    std::cout << "\narccos(t)^2:\n";
    const auto ac = std::get<Series<PiPoly>>(theorem_series({Family::ArccosPow, 2, 6}));
    for (int i = 0; i <= 6; ++i) {
        std::cout << "  t^" << i << "  " << ac[i] << "\n";
    }
    return 0;
}
