#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "classify.hpp"
#include "hypercube.hpp"
#include "pauli.hpp"
#include "qrm_code.hpp"
#include "synthesis.hpp"

namespace qrm {

// Exponents of the diagonal transversal operator (x) Z(k)^f(x), mod 2^(k+1).
class PhaseFunction {
public:
    PhaseFunction(int m, int k) : m_(m), k_(k), exps_(std::size_t{1} << m, 0) {
        check_dimension(m);
        if (k < 0 || k > 30) throw UsageError("hierarchy level must lie in [0, 30]");
    }
    PhaseFunction(int m, int k, std::vector<std::uint32_t> exps) : PhaseFunction(m, k) {
        if (exps.size() != exps_.size()) throw UsageError("phase function length must be 2^m");
        for (std::size_t x = 0; x < exps.size(); ++x) exps_[x] = exps[x] & mask();
    }

    int m() const { return m_; }
    int k() const { return k_; }
    std::uint32_t modulus() const { return std::uint32_t{1} << (k_ + 1); }
    std::uint32_t mask() const { return modulus() - 1; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint32_t at(Vertex x) const { return exps_[x]; }

    void add_at(Vertex x, std::int64_t delta) {
        std::int64_t mod = modulus();
        std::int64_t v = (static_cast<std::int64_t>(exps_[x]) + delta % mod + mod) % mod;
        exps_[x] = static_cast<std::uint32_t>(v);
    }
    PhaseFunction& operator+=(const PhaseFunction& other) {
        if (other.m_ != m_ || other.k_ != k_) throw UsageError("phase functions differ in shape");
        for (std::size_t x = 0; x < exps_.size(); ++x) exps_[x] = (exps_[x] + other.exps_[x]) & mask();
        return *this;
    }
    friend PhaseFunction operator+(PhaseFunction a, const PhaseFunction& b) { return a += b; }

    friend bool operator==(const PhaseFunction&, const PhaseFunction&) = default;

private:
    int m_;
    int k_;
    std::vector<std::uint32_t> exps_;
};

// Exponent +1 on A (or (-1)^|x| for the signed operator), zero elsewhere.
inline PhaseFunction phase_of_operator(const OperatorSpec& spec) {
    if (spec.basis != Basis::Z) throw UsageError("the oracle simulates Z-basis operators only");
    PhaseFunction f(spec.cube.m(), spec.k);
    for (Vertex x : spec.cube.vertices()) f.add_at(x, spec.is_signed ? tilde_indicator(spec.cube, x) : 1);
    return f;
}

struct CosetSupport {
    BitVec shift;
    std::vector<BitVec> generators;
};

// Logical X rows in logical order: indicators of e_J + <S \ J>.
inline std::vector<BitVec> logical_x_rows(const QrmCode& code) {
    std::vector<BitVec> rows;
    for (Mask J : code.logical_indices()) rows.push_back(indicator_bits(logical_x_support(code, J)));
    return rows;
}

// |v> is the uniform superposition over u_v + RM(q, m).
inline CosetSupport coset_support(const QrmCode& code, std::uint64_t v) {
    if (code.kappa() < 64 && (v >> code.kappa()) != 0) throw UsageError("logical word longer than kappa");
    CosetSupport out{BitVec(code.n()), rm_basis(code.q(), code.m()).rows()};
    auto rows = logical_x_rows(code);
    for (std::size_t i = 0; i < rows.size() && i < 64; ++i)
        if ((v >> i) & 1U) out.shift ^= rows[i];
    return out;
}

struct OracleOptions {
    // Logical words to draw when sampling; 0 selects the default of 2^14.
    std::uint64_t sample = 0;
    std::uint64_t seed = 1;
    bool force_sample = false;
};

struct Witness {
    std::uint64_t word = 0;
    BitVec first;
    BitVec second;
    std::uint32_t first_phase = 0;
    std::uint32_t second_phase = 0;
};

struct PhaseProfile {
    int k = 0;
    bool sampled = false;
    // (logical word, phase relative to the all-zero word) sorted by word.
    std::vector<std::pair<std::uint64_t, std::uint32_t>> entries;

    bool all_zero() const {
        return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.second == 0; });
    }
};

struct ScanResult {
    bool preserves = true;
    bool sampled = false;
    std::uint64_t evaluations = 0;
    std::optional<Witness> witness;
    PhaseProfile profile;
};

inline constexpr int kExhaustiveLog2 = 24;
inline constexpr std::uint64_t kDefaultSample = std::uint64_t{1} << 14;
inline constexpr int kCosetSampleLog2 = 16;

namespace detail {

// Evaluates sum_x f(x) c_x mod 2^(k+1) through popcounts of bit planes of f.
class PhaseEvaluator {
public:
    explicit PhaseEvaluator(const PhaseFunction& f) : k_(f.k()), mask_(f.mask()) {
        std::size_t n = f.exponents().size();
        for (int b = 0; b <= k_; ++b) {
            BitVec plane(n);
            for (std::size_t x = 0; x < n; ++x)
                if ((f.exponents()[x] >> b) & 1U) plane.set(x);
            planes_.push_back(std::move(plane));
        }
    }
    std::uint32_t operator()(const BitVec& c) const {
        std::uint64_t total = 0;
        for (int b = 0; b <= k_; ++b) total += static_cast<std::uint64_t>(planes_[static_cast<std::size_t>(b)].and_count(c)) << b;
        return static_cast<std::uint32_t>(total) & mask_;
    }

private:
    int k_;
    std::uint32_t mask_;
    std::vector<BitVec> planes_;
};

}  // namespace detail

// Scans the code basis states for the diagonal operator f. Each visited coset
// is checked for a constant phase; the profile records the phase of every
// visited logical word relative to the word 0.
inline ScanResult scan(const QrmCode& code, const PhaseFunction& f, const OracleOptions& opts = {}) {
    if (f.m() != code.m()) throw UsageError("phase function dimension does not match the code");
    std::size_t kappa = code.kappa();
    if (kappa > 63) throw DomainError("the oracle supports at most 63 logical qubits");
    auto stab = rm_basis(code.q(), code.m()).rows();
    auto lrows = logical_x_rows(code);
    std::size_t rho = stab.size();
    detail::PhaseEvaluator phase(f);

    ScanResult res;
    res.profile.k = f.k();
    bool exhaustive = !opts.force_sample && rho + kappa <= static_cast<std::size_t>(kExhaustiveLog2);
    res.sampled = !exhaustive;
    res.profile.sampled = res.sampled;
    std::mt19937_64 rng(opts.seed);

    // Visits the coset of c; returns its phase or records a witness.
    bool sample_coset = rho > static_cast<std::size_t>(kCosetSampleLog2);
    auto visit = [&](std::uint64_t word, BitVec c) -> std::optional<std::uint32_t> {
        std::uint32_t first = phase(c);
        BitVec first_member = c;
        auto check = [&](const BitVec& member) {
            ++res.evaluations;
            std::uint32_t p = phase(member);
            if (p != first) {
                res.witness = Witness{word, first_member, member, first, p};
                return false;
            }
            return true;
        };
        if (!sample_coset) {
            std::uint64_t count = std::uint64_t{1} << rho;
            for (std::uint64_t i = 1; i < count; ++i) {
                c ^= stab[static_cast<std::size_t>(std::countr_zero(i))];
                if (!check(c)) return std::nullopt;
            }
        } else {
            res.sampled = true;
            res.profile.sampled = true;
            for (std::uint64_t t = 0; t < (std::uint64_t{1} << kCosetSampleLog2); ++t) {
                BitVec member = first_member;
                for (std::size_t g = 0; g < rho; ++g)
                    if (rng() & 1U) member ^= stab[g];
                if (!check(member)) return std::nullopt;
            }
        }
        return first;
    };

    auto record = [&](std::uint64_t word, std::uint32_t p) { res.profile.entries.emplace_back(word, p); };

    if (exhaustive) {
        BitVec u(code.n());
        std::uint64_t count = std::uint64_t{1} << kappa;
        for (std::uint64_t i = 0; i < count; ++i) {
            if (i > 0) u ^= lrows[static_cast<std::size_t>(std::countr_zero(i))];
            std::uint64_t word = i ^ (i >> 1);
            auto p = visit(word, u);
            if (!p) {
                res.preserves = false;
                return res;
            }
            record(word, *p);
        }
    } else {
        std::uint64_t draws = opts.sample ? opts.sample : kDefaultSample;
        std::vector<std::uint64_t> words{0};
        std::uint64_t word_mask = kappa == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << kappa) - 1);
        for (std::uint64_t t = 0; t < draws; ++t) words.push_back(rng() & word_mask);
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        for (std::uint64_t word : words) {
            BitVec u(code.n());
            for (std::size_t i = 0; i < kappa; ++i)
                if ((word >> i) & 1U) u ^= lrows[i];
            auto p = visit(word, u);
            if (!p) {
                res.preserves = false;
                return res;
            }
            record(word, *p);
        }
    }
    std::sort(res.profile.entries.begin(), res.profile.entries.end());
    std::uint32_t base = res.profile.entries.front().second;
    for (auto& e : res.profile.entries) e.second = (e.second - base) & f.mask();
    return res;
}

inline bool verify_preserves(const QrmCode& code, const PhaseFunction& f, const OracleOptions& opts = {}) {
    return scan(code, f, opts).preserves;
}

class NotPreservingError : public DomainError {
public:
    explicit NotPreservingError(Witness w)
        : DomainError("operator does not preserve the code space"), witness(std::move(w)) {}
    Witness witness;
};

inline PhaseProfile phase_profile(const QrmCode& code, const PhaseFunction& f, const OracleOptions& opts = {}) {
    auto res = scan(code, f, opts);
    if (!res.preserves) throw NotPreservingError(*res.witness);
    return res.profile;
}

// Tag read off from the scan: a witness coset, a zero profile, or otherwise.
inline Tag oracle_tag(const ScanResult& res) {
    if (!res.preserves) return Tag::NotPreserving;
    return res.profile.all_zero() ? Tag::Stabilizer : Tag::NontrivialLogical;
}

// Gates as bitmasks over logical numbers.
inline std::vector<std::uint64_t> gate_words(const QrmCode& code, const CzCircuit& c) {
    std::vector<std::uint64_t> out;
    for (const auto& g : c.gates()) {
        std::uint64_t w = 0;
        for (Mask J : g) {
            int idx = code.logical_number(J);
            if (idx < 0 || idx > 63) throw UsageError("gate references " + mask_to_set_string(J) + ", not a logical index");
            w |= std::uint64_t{1} << idx;
        }
        out.push_back(w);
    }
    return out;
}

// 2^k times the parity of gates fully switched on by the word.
inline std::uint32_t circuit_phase(const std::vector<std::uint64_t>& gates, std::uint64_t word, int k) {
    unsigned parity = 0;
    for (auto g : gates) parity ^= (word & g) == g ? 1U : 0U;
    return parity ? (std::uint32_t{1} << k) : 0U;
}

struct EquivalenceResult {
    bool equivalent = false;
    bool preserves = false;
    bool sampled = false;
    std::optional<Witness> preservation_witness;
    std::optional<std::uint64_t> word;
    std::uint32_t operator_phase = 0;
    std::uint32_t circuit_phase = 0;
};

inline EquivalenceResult verify_equivalence(const QrmCode& code, const PhaseFunction& f, const CzCircuit& c,
                                            const OracleOptions& opts = {}) {
    EquivalenceResult out;
    auto res = scan(code, f, opts);
    out.preserves = res.preserves;
    out.sampled = res.sampled;
    if (!res.preserves) {
        out.preservation_witness = res.witness;
        return out;
    }
    auto gates = gate_words(code, c);
    for (const auto& [word, p] : res.profile.entries) {
        std::uint32_t expected = circuit_phase(gates, word, f.k());
        if (expected != p) {
            out.word = word;
            out.operator_phase = p;
            out.circuit_phase = expected;
            return out;
        }
    }
    out.equivalent = true;
    return out;
}

inline EquivalenceResult verify_equivalence(const QrmCode& code, const OperatorSpec& spec, const CzCircuit& c,
                                            const OracleOptions& opts = {}) {
    return verify_equivalence(code, phase_of_operator(spec), c, opts);
}

}  // namespace qrm
