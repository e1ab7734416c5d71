#pragma once

// Test-side reference computations shared by the unit suite and the
// acceptance binary. These deliberately avoid the library shortcuts they
// check: parity checks come from the stabilizer generators themselves,
// distance from weight enumeration, covers from an unrestricted search.

#include <array>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qrm/qrm_code.hpp"
#include "qrm/synthesis.hpp"

namespace test_support {

using qrm::BitVec;
using qrm::Mask;

// Reference rows (m, q, r, n, kappa, d, k_max) of the implementation table.
inline const std::vector<std::array<int, 7>> kPaperTable{{
    {3, 0, 1, 8, 3, 2, 2},        {4, 0, 1, 16, 4, 2, 3},       {5, 0, 1, 32, 5, 2, 4},
    {5, 0, 2, 32, 15, 2, 2},      {6, 0, 1, 64, 6, 2, 5},       {6, 0, 2, 64, 21, 2, 2},
    {6, 1, 2, 64, 15, 4, 2},      {7, 0, 1, 128, 7, 2, 6},      {7, 0, 2, 128, 28, 2, 3},
    {7, 1, 2, 128, 21, 4, 2},     {7, 0, 3, 128, 63, 2, 2},     {8, 0, 1, 256, 8, 2, 7},
    {8, 0, 2, 256, 36, 2, 3},     {8, 1, 2, 256, 28, 4, 3},     {8, 0, 3, 256, 92, 2, 2},
    {8, 1, 3, 256, 84, 4, 2},     {9, 0, 1, 512, 9, 2, 8},      {9, 0, 2, 512, 45, 2, 4},
    {9, 1, 2, 512, 36, 4, 3},     {9, 0, 3, 512, 129, 2, 2},    {9, 1, 3, 512, 120, 4, 2},
    {9, 2, 3, 512, 84, 8, 2},     {9, 0, 4, 512, 255, 2, 2},    {10, 0, 1, 1024, 10, 2, 9},
    {10, 0, 2, 1024, 55, 2, 4},   {10, 1, 2, 1024, 45, 4, 4},   {10, 0, 3, 1024, 175, 2, 3},
    {10, 1, 3, 1024, 165, 4, 2},  {10, 2, 3, 1024, 120, 8, 2},  {10, 0, 4, 1024, 385, 2, 2},
    {10, 1, 4, 1024, 375, 4, 2},
}};

// Empty string when every stabilizer pair commutes and the logical pairs
// anticommute exactly on the diagonal; otherwise a description.
inline std::string check_structure(const qrm::QrmCode& code) {
    std::ostringstream err;
    auto g = qrm::stabilizer_generators(code);
    for (const auto& x : g.x)
        for (const auto& z : g.z)
            if (!qrm::commutes(x, z)) {
                err << "stabilizers anticommute; ";
                return err.str();
            }
    auto basis = qrm::logical_basis(code);
    for (const auto& a : basis) {
        for (const auto& b : basis)
            if (qrm::commutes(a.z, b.x) == (a.index == b.index))
                err << "pair " << qrm::mask_to_set_string(a.index) << "/" << qrm::mask_to_set_string(b.index) << "; ";
        for (const auto& x : g.x)
            if (!qrm::commutes(a.z, x)) err << "logical Z meets X stabilizer; ";
        for (const auto& z : g.z)
            if (!qrm::commutes(a.x, z)) err << "logical X meets Z stabilizer; ";
    }
    return err.str();
}

// Nontrivial CSS logical of one type: orthogonal to every row of `checks`
// and outside the span of `trivial`.
struct LogicalTest {
    const std::vector<BitVec>* checks;
    qrm::F2Basis span;

    bool accepts(const BitVec& v) const {
        for (const auto& c : *checks)
            if (c.and_count(v) & 1U) return false;
        return !span.contains(v);
    }
};

// Smallest weight of a nontrivial logical of either type, by enumerating
// vectors in increasing weight (n <= 63).
inline std::uint64_t brute_force_distance(const qrm::QrmCode& code) {
    auto g = qrm::stabilizer_generators(code);
    std::size_t n = code.n();
    std::vector<BitVec> xs, zs;
    for (const auto& p : g.x) xs.push_back(p.x_support);
    for (const auto& p : g.z) zs.push_back(p.z_support);
    // Z logicals commute with X stabilizers and are not Z stabilizers; dually for X.
    LogicalTest z_type{&xs, qrm::F2Basis(n)}, x_type{&zs, qrm::F2Basis(n)};
    for (const auto& v : zs) z_type.span.insert(v);
    for (const auto& v : xs) x_type.span.insert(v);
    std::uint64_t limit = std::uint64_t{1} << n;
    for (std::size_t w = 1; w <= n; ++w) {
        std::uint64_t s = (std::uint64_t{1} << w) - 1;
        while (s < limit) {
            BitVec v(n);
            for (std::size_t i = 0; i < n; ++i)
                if ((s >> i) & 1U) v.set(i);
            if (z_type.accepts(v) || x_type.accepts(v)) return w;
            std::uint64_t c = s & (~s + 1);
            std::uint64_t r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return 0;
}

// All subsets of the full logical index set of size k+1 with union K.
inline std::set<qrm::Gate, qrm::GateLess> naive_covers(const qrm::QrmCode& code, Mask K, int k) {
    const auto& all = code.logical_indices();
    std::set<qrm::Gate, qrm::GateLess> out;
    std::uint64_t count = std::uint64_t{1} << all.size();
    for (std::uint64_t s = 1; s < count; ++s) {
        if (static_cast<int>(std::popcount(s)) != k + 1) continue;
        std::vector<Mask> members;
        Mask u = 0;
        for (std::size_t i = 0; i < all.size(); ++i)
            if ((s >> i) & 1U) {
                members.push_back(all[i]);
                u |= all[i];
            }
        if (u == K) out.insert(qrm::make_gate(members));
    }
    return out;
}

}  // namespace test_support
