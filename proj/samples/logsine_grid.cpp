// Ls_j^{(k)}(theta) on a small grid, by all three routes.

#include <cstdio>
#include <numbers>

#include <series_forge/logsine.hpp>

using namespace series_forge;

int main()
{
    const double thetas[] = {std::numbers::pi / 6, std::numbers::pi / 3, std::numbers::pi / 2};
    std::printf("%3s %3s %10s %22s %22s %22s\n", "j", "k", "theta", "quad", "arcsin", "series");
    for (int j = 2; j <= 4; ++j) {
        for (int k = 1; k < j; ++k) {
            for (double th : thetas) {
                LogsineRequest req;
                req.j = j;
                req.k = k;
                req.theta = th;
                std::printf("%3d %3d %10.6f %22.15f %22.15f %22.15f\n", j, k, th, logsine_quadrature(req).value,
                            logsine_arcsin_form(req).value, logsine_series(req).value);
            }
        }
    }
    return 0;
}
