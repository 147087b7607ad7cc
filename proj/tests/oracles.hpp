#pragma once
#include <string>
#include <vector>
#include "eptl/intertwiner.hpp"
#include "eptl/linkrep.hpp"
#include "eptl/projectors.hpp"
#include "helpers.hpp"

// Known matrices, each in its customary basis order, with the maps to ours.
namespace oracle {

using eptl::LaurentPoly;
using eptl::RingMatrix;

// Link states (12)(34), (14)(23), (25)(34), (23)(45), (12)(47), (36)(45) in that order.
inline const std::vector<int> link_order_4_0 = {0, 1, 4, 3, 2, 5};
inline const std::vector<std::string> spin_order_4_0 = {"+-+-", "++--", "-++-", "-+-+", "+--+", "--++"};
// Open five-site states (12)(34), (14)(23), (12)(45), (23)(45), (25)(34).
inline const std::vector<int> open_order_5_1 = {0, 2, 1, 3, 4};

inline RingMatrix intertwiner_4_0() {
    using th::u;
    using th::v;
    auto one = LaurentPoly(1), zero = LaurentPoly(0);
    return th::from_rows({
        {u(2) * v(2), v(2), v(-2), u(-2) * v(-2), v(-2), v(2)},
        {zero, u(2) * v(4), zero, one, zero, u(-2) * v(-4)},
        {one, zero, u(2) * v(4), zero, u(-2) * v(-4), zero},
        {u(-2) * v(-2), v(-2), v(2), u(2) * v(2), v(2), v(-2)},
        {one, zero, u(-2) * v(-4), zero, u(2) * v(4), zero},
        {zero, u(-2) * v(-4), zero, one, zero, u(2) * v(4)},
    });
}

inline RingMatrix gram_4_0() {
    auto b = th::beta(), a = th::alpha(4);
    return th::from_rows({{b * b, b, a * b, a, a * b, b},
                          {b, b * b, a, a * b, a, a * a},
                          {a * b, a, b * b, b, a * a, a},
                          {a, a * b, b, b * b, b, a * b},
                          {a * b, a, a * a, b, b * b, a},
                          {b, a * a, a, a * b, a, b * b}});
}

inline RingMatrix open_gram_5_1() {
    using th::v;
    auto b = th::beta();
    return th::from_rows({{b * b, b, b * v(-2), v(-4), b * v(-4)},
                          {b, b * b, v(-2), b * v(-4), v(-4)},
                          {b * v(2), v(2), b * b, b * v(-2), v(-2)},
                          {v(4), b * v(4), b * v(2), b * b, b},
                          {b * v(4), v(4), v(2), b, b * b}});
}

inline std::vector<int> spin_rows_4_0() {
    eptl::SpinIndex s(4, 0);
    std::vector<int> rows;
    for (auto& l : spin_order_4_0) rows.push_back(s.index(eptl::parse_spin_label(l)));
    return rows;
}

// Gram matrix in the projected basis on four sites, d = 0, 2, 4, in our basis order.
inline std::vector<std::vector<eptl::RingFraction>> gamma_4(int d) {
    using eptl::KMode;
    using eptl::RingFraction;
    RingFraction b(th::beta()), z, one(LaurentPoly(1));
    if (d == 4) return {{one}};
    if (d == 2) {
        RingFraction vm(th::v(-2)), vp(th::v(2));
        auto K21 = eptl::k_factor(2, 1, KMode::ClosedForm, 4);
        return {{b, vm, z, z}, {vp, b, vm, z}, {z, vp, b, z}, {z, z, z, K21}};
    }
    auto K01 = eptl::k_factor(0, 1, KMode::ClosedForm, 4);
    auto K02 = eptl::k_factor(0, 2, KMode::ClosedForm, 4);
    return {{b * b, b, z, z, z, z},
            {b, b * b, z, z, z, z},
            {z, z, K01 * b, K01, z, z},
            {z, z, K01, K01 * b, K01, z},
            {z, z, z, K01, K01 * b, z},
            {z, z, z, z, z, K02}};
}

// Empty when gamma_matrix(4, d) equals the known blocks, else the first differing entry.
inline std::string gamma_4_difference(int d) {
    auto g = eptl::gamma_matrix(4, d);
    auto expect = gamma_4(d);
    if (g.num.rows() != static_cast<int>(expect.size())) return "size";
    for (int a = 0; a < g.num.rows(); ++a)
        for (int c = 0; c < g.num.cols(); ++c)
            if (eptl::RingFraction(g.num(a, c), g.den[a] * g.den[c]) != expect[a][c])
                return "(" + std::to_string(a) + "," + std::to_string(c) + ")";
    return "";
}

}  // namespace oracle
