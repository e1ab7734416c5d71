#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bits.hpp"
#include "hypercube.hpp"
#include "pauli.hpp"

namespace qrm {

struct CodeParams {
    std::uint64_t n = 0;
    std::uint64_t kappa = 0;
    std::uint64_t d = 0;
    int k_max = 0;  // -1 when no level exists (r = 0 or q = m)

    friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

inline int floor_div(int a, int b) {
    int q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

// QRM_m(q, r): X stabilizers on (m-q)-cubes, Z stabilizers on (r+1)-cubes.
class QrmCode {
public:
    QrmCode(int m, int q, int r) : m_(m), q_(q), r_(r) {
        if (m < 0 || m > kMaxDimension)
            throw DomainError("code dimension m must lie in [0, " + std::to_string(kMaxDimension) + "]");
        if (q < 0 || q > r || r > m)
            throw DomainError("code orders must satisfy 0 <= q <= r <= m, got (m,q,r)=(" + std::to_string(m) + "," +
                              std::to_string(q) + "," + std::to_string(r) + ")");
        Mask all = full_mask(m);
        for (Mask J = 0; J <= all; ++J) {
            int w = popcount(J);
            if (w >= q + 1 && w <= r) logicals_.push_back(J);
        }
        std::sort(logicals_.begin(), logicals_.end(), index_less);
    }

    int m() const { return m_; }
    int q() const { return q_; }
    int r() const { return r_; }
    std::size_t n() const { return std::size_t{1} << m_; }
    std::size_t kappa() const { return logicals_.size(); }

    // Logical index set, ordered by size then lexicographically.
    const std::vector<Mask>& logical_indices() const { return logicals_; }

    // Position of J in logical_indices(), or -1.
    int logical_number(Mask J) const {
        auto it = std::lower_bound(logicals_.begin(), logicals_.end(), J, index_less);
        if (it == logicals_.end() || *it != J) return -1;
        return static_cast<int>(it - logicals_.begin());
    }

    CodeParams parameters() const {
        CodeParams p;
        p.n = std::uint64_t{1} << m_;
        for (int i = q_ + 1; i <= r_; ++i) p.kappa += binomial(m_, i);
        p.d = std::uint64_t{1} << std::min(q_ + 1, m_ - r_);
        p.k_max = r_ == 0 ? -1 : floor_div(m_ - q_ - 1, r_);
        return p;
    }

    friend bool operator==(const QrmCode&, const QrmCode&) = default;

private:
    int m_, q_, r_;
    std::vector<Mask> logicals_;
};

struct StabilizerGenerators {
    std::vector<PauliOp> x;
    std::vector<PauliOp> z;
};

inline StabilizerGenerators stabilizer_generators(const QrmCode& code) {
    StabilizerGenerators g;
    for (const auto& a : enumerate_subcubes(code.m(), code.m() - code.q())) g.x.push_back(subcube_pauli(Basis::X, a));
    if (code.r() + 1 <= code.m())
        for (const auto& a : enumerate_subcubes(code.m(), code.r() + 1)) g.z.push_back(subcube_pauli(Basis::Z, a));
    return g;
}

struct LogicalPair {
    Mask index;
    PauliOp z;  // Z on <J>
    PauliOp x;  // X on e_J + <S \ J>
};

inline Subcube logical_x_support(const QrmCode& code, Mask J) {
    return Subcube(code.m(), J, full_mask(code.m()) & ~J);
}

inline std::vector<LogicalPair> logical_basis(const QrmCode& code) {
    std::vector<LogicalPair> out;
    for (Mask J : code.logical_indices())
        out.push_back(LogicalPair{J, subcube_pauli(Basis::Z, Subcube::standard(code.m(), J)),
                                  subcube_pauli(Basis::X, logical_x_support(code, J))});
    return out;
}

// Indicator rows of <J> with |J| >= m - r; their F_2 span is RM(r, m).
inline std::vector<BitVec> rm_generator_matrix(int r, int m) {
    check_dimension(m);
    if (r < -1 || r > m) throw UsageError("Reed-Muller order must lie in [-1, m]");
    std::vector<BitVec> rows;
    if (r < 0) return rows;
    Mask all = full_mask(m);
    for (Mask J = 0; J <= all; ++J)
        if (popcount(J) >= m - r) rows.push_back(indicator_bits(Subcube::standard(m, J)));
    return rows;
}

inline F2Basis rm_basis(int r, int m) {
    F2Basis basis(std::size_t{1} << m);
    for (auto& row : rm_generator_matrix(r, m)) basis.insert(row);
    return basis;
}

inline std::size_t rm_rank(int r, int m) { return rm_basis(r, m).rank(); }

struct TableRow {
    int m, q, r;
    CodeParams params;
};

// Codes with q < r and 1 <= m <= max_m whose k_max reaches min_kmax, ordered
// by m, then r, then q.
inline std::vector<TableRow> implementation_table(int max_m, int min_kmax) {
    if (max_m < 0 || max_m > kMaxDimension) throw UsageError("max-m out of range");
    std::vector<TableRow> rows;
    for (int m = 1; m <= max_m; ++m)
        for (int r = 1; r <= m; ++r)
            for (int q = 0; q < r; ++q) {
                QrmCode code(m, q, r);
                auto p = code.parameters();
                if (p.k_max >= min_kmax) rows.push_back(TableRow{m, q, r, p});
            }
    return rows;
}

}  // namespace qrm
