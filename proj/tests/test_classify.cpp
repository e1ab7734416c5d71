#include <gtest/gtest.h>

#include "qrm/classify.hpp"

using namespace qrm;

namespace {

Tag tag_at(int m, int q, int r, Basis b, int k, int dim) { return classify_dim(QrmCode(m, q, r), b, k, dim); }

}  // namespace

TEST(Classify, ThresholdExamples) {
    EXPECT_EQ(tag_at(8, 0, 2, Basis::Z, 2, 5), Tag::NontrivialLogical);
    EXPECT_EQ(tag_at(8, 0, 2, Basis::Z, 2, 7), Tag::Stabilizer);
    EXPECT_EQ(tag_at(8, 0, 2, Basis::Z, 2, 4), Tag::NotPreserving);
    EXPECT_EQ(tag_at(8, 1, 2, Basis::Z, 0, 1), Tag::NotPreserving);
    for (int m = 1; m <= 6; ++m)
        for (int r = 0; r < m; ++r)
            for (int q = 0; q <= r; ++q) EXPECT_EQ(tag_at(m, q, r, Basis::Z, 0, r + 1), Tag::Stabilizer);
}

TEST(Classify, SignedAndUnsignedShareThresholds) {
    QrmCode code(5, 0, 2);
    for (const auto& a : enumerate_all_subcubes(5))
        for (int k = 0; k <= 3; ++k)
            EXPECT_EQ(classify(code, OperatorSpec{Basis::Z, true, k, a}), classify(code, OperatorSpec{Basis::Z, false, k, a}));
    EXPECT_THROW(classify(code, OperatorSpec{Basis::Z, true, 1, Subcube::whole(4)}), UsageError);
}

TEST(Classify, XBasisBySubstitution) {
    // X thresholds: logical for m-r+k(m-q-1) <= dim <= (k+1)(m-q-1).
    QrmCode code(6, 1, 2);
    for (int k = 0; k <= 3; ++k) {
        auto t = thresholds(code, Basis::X, k);
        EXPECT_EQ(t.logical_min, 6 - 2 + k * 4);
        EXPECT_EQ(t.logical_max, (k + 1) * 4);
    }
    EXPECT_EQ(tag_at(6, 1, 2, Basis::X, 0, 4), Tag::NontrivialLogical);
    EXPECT_EQ(tag_at(6, 1, 2, Basis::X, 0, 5), Tag::Stabilizer);
}

TEST(Classify, AdmissibleFigures) {
    // Hypercube codes: dimension d >= 1 is logical exactly at level d-1.
    for (int m = 2; m <= 7; ++m) {
        QrmCode code(m, 0, 1);
        for (int d = 1; d <= m; ++d)
            for (int k = 0; k <= m; ++k)
                EXPECT_EQ(classify_dim(code, Basis::Z, k, d) == Tag::NontrivialLogical, k == d - 1);
    }
    // QRM_m(r-1, r): logical iff dim = (k+1)r.
    for (int m = 2; m <= 8; ++m)
        for (int r = 1; r <= m; ++r) {
            QrmCode code(m, r - 1, r);
            for (int d = 0; d <= m; ++d)
                for (int k = 0; k <= m; ++k)
                    EXPECT_EQ(classify_dim(code, Basis::Z, k, d) == Tag::NontrivialLogical, d == (k + 1) * r);
        }
    auto rows = admissible_table(QrmCode(8, 0, 2), 3);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(rows[0].label, "X");
    std::string z2;
    for (Tag t : rows[3].tags) z2 += tag_glyph(t);
    EXPECT_EQ(z2, ".....LLII");
}

TEST(Classify, SquaringLaw) {
    for (int m = 1; m <= 8; ++m)
        for (int r = 1; r <= m; ++r)
            for (int q = 0; q <= r; ++q) {
                QrmCode code(m, q, r);
                for (int k = 1; k <= m + 1; ++k)
                    for (int d = 0; d <= m; ++d)
                        if (classify_dim(code, Basis::Z, k, d) == Tag::NontrivialLogical) {
                            EXPECT_EQ(classify_dim(code, Basis::Z, k - 1, d), Tag::Stabilizer);
                        }
            }
}

TEST(ConjugateX, PhaseCases) {
    auto vertex_spec = OperatorSpec{Basis::Z, false, 2, Subcube::whole(3)};
    auto single = conjugate_x(vertex_spec, Subcube::vertex(3, 0b011));
    EXPECT_TRUE(single.intersects);
    EXPECT_EQ(single.phase_exp, 1);
    EXPECT_EQ(single.modulus, 8);
    ASSERT_TRUE(single.residual.has_value());
    EXPECT_EQ(single.residual->k, 1);
    EXPECT_EQ(single.residual->cube, Subcube::vertex(3, 0b011));

    auto edge = conjugate_x(OperatorSpec{Basis::Z, true, 3, Subcube::whole(4)}, parse_subcube("0100+<1>", 4));
    EXPECT_TRUE(edge.phase_free());

    auto cube3 = conjugate_x(OperatorSpec{Basis::Z, false, 2, Subcube::whole(4)}, parse_subcube("<1,2,3>", 4));
    EXPECT_EQ(cube3.phase_exp, 0);

    auto odd = conjugate_x(OperatorSpec{Basis::Z, true, 2, Subcube::whole(3)}, Subcube::vertex(3, 0b001));
    EXPECT_EQ(odd.phase_exp, 7);

    auto none = conjugate_x(OperatorSpec{Basis::Z, false, 2, Subcube::standard(3, 0b001)}, parse_subcube("010+<3>", 3));
    EXPECT_FALSE(none.intersects);
    EXPECT_FALSE(none.residual.has_value());

    auto level0 = conjugate_x(OperatorSpec{Basis::Z, false, 0, Subcube::whole(3)}, Subcube::vertex(3, 0));
    EXPECT_EQ(level0.phase_exp, 1);
    EXPECT_FALSE(level0.residual.has_value());
}

TEST(ConjugateX, UnsignedPhaseFreeIffLargeOverlap) {
    for (const auto& a : enumerate_all_subcubes(4))
        for (const auto& b : enumerate_all_subcubes(4))
            for (int k = 0; k <= 3; ++k) {
                auto meet = intersect(a, b);
                if (!meet) continue;
                auto u = conjugate_x(OperatorSpec{Basis::Z, false, k, a}, b);
                auto s = conjugate_x(OperatorSpec{Basis::Z, true, k, a}, b);
                EXPECT_EQ(u.phase_free(), meet->dim() >= k + 1);
                EXPECT_EQ(s.phase_free(), meet->dim() >= 1);
            }
}

TEST(Exclusivity, NoSimultaneousHigherLevelLogic) {
    for (int m = 0; m <= 6; ++m)
        for (int r = 0; r <= m; ++r)
            for (int q = 0; q <= r; ++q) {
                QrmCode code(m, q, r);
                for (int k = 2; k <= 2 * m + 2; ++k) {
                    bool z = false, x = false;
                    for (int d = 0; d <= m; ++d) {
                        z = z || classify_dim(code, Basis::Z, k, d) == Tag::NontrivialLogical;
                        x = x || classify_dim(code, Basis::X, k, d) == Tag::NontrivialLogical;
                    }
                    EXPECT_FALSE(z && x) << m << q << r << " k=" << k;
                }
            }
    for (int r = 1; r <= 5; ++r)
        for (int q = 0; q < r && q + r + 1 <= 6; ++q) {
            QrmCode code(q + r + 1, q, r);
            EXPECT_EQ(classify_dim(code, Basis::Z, 1, code.m()), Tag::NontrivialLogical);
            EXPECT_EQ(classify_dim(code, Basis::X, 1, code.m()), Tag::NontrivialLogical);
        }
}
