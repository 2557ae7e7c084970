#include <iostream>

#include <ccr/ccr.hpp>

using namespace ccr;

int main()
{
    const RationalField qq{};

    // U_5 over Q, then the numerators of the isogenous curve.
    const WeightedPoly u5 = compute_ccr_series(Kind::U, 5, qq);
    std::cout << to_text(u5);
    const auto nums = compute_numerators(5, u5, qq);
    std::cout << to_text(nums.a) << to_text(nums.b);

    // The float and CRT methods must agree with the series method.
    const WeightedPoly viaFloat = compute_ccr_float(Kind::V, 7);
    const WeightedPoly viaCrt = compute_ccr_crt(Kind::V, 7);
    const WeightedPoly viaSeries = compute_ccr_series(Kind::V, 7, qq);
    std::cout << "V_7 float == series: " << (viaFloat == viaSeries) << "\n";
    std::cout << "V_7 crt == series: " << (viaCrt == viaSeries) << "\n";

    // U_5 mod 1811 from the 5-volcano over the class polynomial of D = -71.
    const ClassPolynomial h = load_class_poly(class_poly_path(-71));
    const VolcanoResult v = compute_u_mod_p(Kind::U, 5, h, 1811);
    std::cout << "volcano curves: " << v.rows.size() << "\n";
    std::cout << to_text(v.poly);
    std::cout << "matches reduction: " << (v.poly == reduce_mod(u5, 1811)) << "\n";

    const HeightStats hs = height_stats(u5.poly, 5);
    std::cout << "H = " << hs.height << ", Hhat = " << hs.relative_height << ", S = " << hs.bit_size << "\n";
    return 0;
}
