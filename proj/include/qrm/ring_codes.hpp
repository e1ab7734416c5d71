#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bits.hpp"
#include "hypercube.hpp"
#include "oracle.hpp"
#include "qrm_code.hpp"

namespace qrm {

// Function Z_2^m -> Z_{2^(k+1)}.
struct RingVector {
    int k = 0;
    std::vector<std::uint32_t> entries;

    std::uint32_t modulus() const { return std::uint32_t{1} << (k + 1); }
    bool is_zero() const {
        for (auto e : entries)
            if (e) return false;
        return true;
    }
    friend bool operator==(const RingVector&, const RingVector&) = default;
};

struct RingModule {
    int k = 0;
    std::size_t length = 0;
    std::vector<RingVector> generators;
};

inline void check_ring_level(int k) {
    if (k < 0 || k > 30) throw UsageError("ring level must lie in [0, 30]");
}

inline RingVector signed_indicator_vector(const Subcube& a, int k, std::uint32_t scale = 1) {
    RingVector v{k, std::vector<std::uint32_t>(std::size_t{1} << a.m(), 0)};
    std::uint32_t mask = v.modulus() - 1;
    for (Vertex x : a.vertices()) v.entries[x] = (tilde_indicator(a, x) > 0 ? scale : (0U - scale)) & mask;
    return v;
}

// RM_k(r, m): generated by signed indicators of <J> with |J| >= m - r.
inline RingModule grm_generators(int k, int r, int m) {
    check_ring_level(k);
    check_dimension(m);
    if (r < -1 || r > m) throw UsageError("Reed-Muller order must lie in [-1, m]");
    RingModule mod{k, std::size_t{1} << m, {}};
    if (r < 0) return mod;
    Mask all = full_mask(m);
    for (Mask J = 0; J <= all; ++J)
        if (popcount(J) >= m - r) mod.generators.push_back(signed_indicator_vector(Subcube::standard(m, J), k));
    return mod;
}

// Union over i = 0..k of 2^(k-i) * RM_k(m - (q+ir+1), m).
inline RingModule stacked_error_module(const QrmCode& code, int k) {
    check_ring_level(k);
    int m = code.m();
    RingModule mod{k, code.n(), {}};
    for (int i = 0; i <= k; ++i) {
        int order = m - (code.q() + i * code.r() + 1);
        if (order < 0) continue;
        std::uint32_t scale = std::uint32_t{1} << (k - i);
        Mask all = full_mask(m);
        for (Mask J = 0; J <= all; ++J)
            if (popcount(J) >= m - order)
                mod.generators.push_back(signed_indicator_vector(Subcube::standard(m, J), k, scale));
    }
    return mod;
}

// Echelon form over Z_{2^(k+1)}: each pivot is a power of two, the leading
// entry of its row, and the annihilator multiples 2^(e-v) * row are folded
// back in so reduction decides membership.
class HowellBasis {
public:
    explicit HowellBasis(const RingModule& mod) : k_(mod.k), length_(mod.length) {
        std::uint32_t modulus = std::uint32_t{1} << (k_ + 1);
        std::uint32_t mask = modulus - 1;
        int e = k_ + 1;
        std::vector<std::vector<std::uint32_t>> pending;
        for (const auto& g : mod.generators) {
            if (g.k != k_ || g.entries.size() != length_) throw UsageError("generator shape mismatch");
            pending.push_back(g.entries);
        }
        for (std::size_t col = 0; col < length_; ++col) {
            int best = -1;
            int best_val = e;
            for (std::size_t i = 0; i < pending.size(); ++i) {
                std::uint32_t a = pending[i][col];
                if (a == 0) continue;
                int val = std::countr_zero(a);
                if (val < best_val) {
                    best_val = val;
                    best = static_cast<int>(i);
                }
            }
            if (best < 0) continue;
            auto pivot = pending[static_cast<std::size_t>(best)];
            pending.erase(pending.begin() + best);
            std::uint32_t unit = pivot[col] >> best_val;
            std::uint32_t inv = inverse_odd(unit) & mask;
            for (auto& a : pivot) a = (a * inv) & mask;
            for (auto& row : pending) {
                std::uint32_t a = row[col];
                if (a == 0) continue;
                std::uint32_t factor = a >> best_val;
                for (std::size_t c = col; c < length_; ++c) row[c] = (row[c] - factor * pivot[c]) & mask;
            }
            if (best_val > 0) {
                std::vector<std::uint32_t> ann(length_);
                std::uint32_t s = std::uint32_t{1} << (e - best_val);
                bool nonzero = false;
                for (std::size_t c = 0; c < length_; ++c) {
                    ann[c] = (pivot[c] * s) & mask;
                    nonzero = nonzero || ann[c] != 0;
                }
                if (nonzero) pending.push_back(std::move(ann));
            }
            std::erase_if(pending, [](const auto& row) {
                for (auto a : row)
                    if (a) return false;
                return true;
            });
            rows_.push_back(std::move(pivot));
            pivot_cols_.push_back(col);
            pivot_vals_.push_back(best_val);
        }
        // Reduce entries above each pivot for a canonical form.
        // Each row is swept left to right, so a step only touches columns
        // that later steps still reduce.
        for (std::size_t j = 0; j < rows_.size(); ++j) {
            for (std::size_t i = j + 1; i < rows_.size(); ++i) {
                std::size_t col = pivot_cols_[i];
                std::uint32_t factor = (rows_[j][col] & mask) >> pivot_vals_[i];
                if (factor == 0) continue;
                for (std::size_t c = col; c < length_; ++c) rows_[j][c] = (rows_[j][c] - factor * rows_[i][c]) & mask;
            }
        }
    }

    bool contains(const RingVector& f) const {
        if (f.k != k_ || f.entries.size() != length_) throw UsageError("vector shape does not match the module");
        std::uint32_t mask = (std::uint32_t{1} << (k_ + 1)) - 1;
        auto v = f.entries;
        for (auto& a : v) a &= mask;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::size_t col = pivot_cols_[i];
            std::uint32_t a = v[col];
            if (a == 0) continue;
            if (std::countr_zero(a) < pivot_vals_[i]) return false;
            std::uint32_t factor = a >> pivot_vals_[i];
            for (std::size_t c = col; c < length_; ++c) v[c] = (v[c] - factor * rows_[i][c]) & mask;
        }
        for (auto a : v)
            if (a) return false;
        return true;
    }

    std::size_t row_count() const { return rows_.size(); }
    const std::vector<std::vector<std::uint32_t>>& rows() const { return rows_; }
    // log2 of the module's cardinality.
    std::size_t log2_size() const {
        std::size_t total = 0;
        for (int v : pivot_vals_) total += static_cast<std::size_t>(k_ + 1 - v);
        return total;
    }

private:
    static std::uint32_t inverse_odd(std::uint32_t a) {
        std::uint32_t x = a;  // Newton iteration for the 2-adic inverse
        for (int i = 0; i < 5; ++i) x *= 2U - a * x;
        return x;
    }

    int k_;
    std::size_t length_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivot_cols_;
    std::vector<int> pivot_vals_;
};

inline bool membership(const RingVector& f, const RingModule& mod) { return HowellBasis(mod).contains(f); }

template <class Rng>
RingVector random_element(const RingModule& mod, Rng& rng) {
    RingVector v{mod.k, std::vector<std::uint32_t>(mod.length, 0)};
    std::uint32_t mask = v.modulus() - 1;
    for (const auto& g : mod.generators) {
        std::uint32_t c = static_cast<std::uint32_t>(rng()) & mask;
        if (c == 0) continue;
        for (std::size_t x = 0; x < v.entries.size(); ++x) v.entries[x] = (v.entries[x] + c * g.entries[x]) & mask;
    }
    return v;
}

inline PhaseFunction to_phase_function(const RingVector& v, int m) { return PhaseFunction(m, v.k, v.entries); }

struct ProbeArm {
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t preserving = 0;
    std::uint64_t members = 0;
    std::uint64_t preserving_members = 0;
};

struct ProbeReport {
    int m = 0, q = 0, r = 0, k = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<ProbeArm> arms;
    // Preserving phase functions outside the stacked module.
    std::vector<RingVector> counterexample_candidates;
    // Module elements the oracle rejected; non-empty means a forward-inclusion failure.
    std::vector<RingVector> inclusion_failures;
    std::string verdict;
};

// Samples phase functions from three arms (module elements, sums of random
// subcube operators, module elements with sparse perturbations), keeps those
// that preserve the code space and records any that fall outside the module.
inline ProbeReport conjecture_probe(const QrmCode& code, int k, std::uint64_t trials, std::uint64_t seed,
                                    std::size_t max_reported = 8) {
    check_ring_level(k);
    ProbeReport rep{code.m(), code.q(), code.r(), k, trials, seed, {}, {}, {}, ""};
    rep.arms = {ProbeArm{"module", 0, 0, 0, 0}, ProbeArm{"subcube_sum", 0, 0, 0, 0},
                ProbeArm{"perturbed", 0, 0, 0, 0}};
    if (trials == 0) {
        rep.verdict = "no trials";
        return rep;
    }
    auto mod = stacked_error_module(code, k);
    HowellBasis basis(mod);
    std::mt19937_64 rng(seed);
    auto cubes = enumerate_all_subcubes(code.m());
    std::uint32_t mask = (std::uint32_t{1} << (k + 1)) - 1;
    OracleOptions opts;
    opts.seed = seed;
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::size_t arm = static_cast<std::size_t>(t % 3);
        RingVector f;
        if (arm == 0) {
            f = random_element(mod, rng);
        } else if (arm == 1) {
            f = RingVector{k, std::vector<std::uint32_t>(code.n(), 0)};
            int terms = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < terms; ++i) {
                const auto& a = cubes[static_cast<std::size_t>(rng() % cubes.size())];
                int level = static_cast<int>(rng() % static_cast<std::uint64_t>(k + 1));
                std::uint32_t scale = std::uint32_t{1} << (k - level);
                bool is_signed = rng() & 1U;
                for (Vertex x : a.vertices()) {
                    std::uint32_t d = (is_signed && (popcount(x) & 1)) ? (0U - scale) : scale;
                    f.entries[x] = (f.entries[x] + d) & mask;
                }
            }
        } else {
            f = random_element(mod, rng);
            int flips = 1 + static_cast<int>(rng() % 2);
            for (int i = 0; i < flips; ++i) {
                std::size_t x = static_cast<std::size_t>(rng() % code.n());
                f.entries[x] = (f.entries[x] + static_cast<std::uint32_t>(rng())) & mask;
            }
        }
        auto& a = rep.arms[arm];
        ++a.trials;
        bool preserves = verify_preserves(code, to_phase_function(f, code.m()), opts);
        bool member = basis.contains(f);
        a.preserving += preserves;
        a.members += member;
        a.preserving_members += preserves && member;
        if (preserves && !member && rep.counterexample_candidates.size() < max_reported)
            rep.counterexample_candidates.push_back(f);
        if (member && !preserves && rep.inclusion_failures.size() < max_reported) rep.inclusion_failures.push_back(f);
    }
    std::uint64_t candidates = 0;
    for (const auto& a : rep.arms) candidates += a.preserving - a.preserving_members;
    if (!rep.inclusion_failures.empty())
        rep.verdict = "forward inclusion violated";
    else if (candidates > 0)
        rep.verdict = "counterexample candidates found: " + std::to_string(candidates);
    else
        rep.verdict = "no counterexample in " + std::to_string(trials) + " trials";
    return rep;
}

}  // namespace qrm
