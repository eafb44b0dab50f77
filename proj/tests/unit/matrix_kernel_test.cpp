#include <random>

#include "pcore/errors.hpp"
#include "pcore/gen_inverse.hpp"
#include "pcore/instance_gen.hpp"
#include "pcore/matrix_kernel.hpp"
#include "exact.hpp"
#include "test_helpers.hpp"

namespace pcore {
namespace {

using test::ex_a;
using test::ex_b;
using test::I1;
using test::m2;
using test::near;

const TolerancePolicy kTol;

TEST(ConjugateTranspose, RealCaseIsTranspose) {
    EXPECT_TRUE(near(conjugate_transpose(m2(0, 0, 1, 0)), m2(0, 1, 0, 0)));
}

TEST(ConjugateTranspose, ConjugatesScalar) {
    EXPECT_EQ(conjugate_transpose(from_rows({{I1}}))(0, 0), -I1);
}

TEST(ConjugateTranspose, ExampleMatrix) {
    EXPECT_TRUE(near(conjugate_transpose(ex_a()), m2(-I1, 0, 0, 0)));
}

TEST(ConjugateTranspose, IsExactInvolution) {
    const ComplexMatrix a = gen_plain(5, 3);
    EXPECT_TRUE((conjugate_transpose(conjugate_transpose(a)) - a).isZero(0.0));
}

TEST(ConjugateTranspose, ReversesProducts) {
    Rng rng(11);
    const ComplexMatrix a = rng.gaussian_matrix(3, 4);
    const ComplexMatrix b = rng.gaussian_matrix(4, 2);
    EXPECT_TRUE(approx_equal(conjugate_transpose(multiply(a, b)),
                             multiply(conjugate_transpose(b), conjugate_transpose(a)), kTol));
}

TEST(Arithmetic, NilpotentSquare) {
    EXPECT_TRUE(power(m2(0, 1, 0, 0), 2).isZero(0.0));
}

TEST(Arithmetic, ZeroPowerIsIdentity) {
    EXPECT_TRUE(near(power(gen_plain(2, 1), 0), identity(2)));
}

TEST(Arithmetic, ExampleSum) {
    EXPECT_TRUE(near(add(ex_a(), ex_b()), m2(I1, 0, 1, 0)));
}

TEST(Arithmetic, ShapeMismatchThrows) {
    EXPECT_THROW(add(identity(2), identity(3)), DimensionError);
    EXPECT_THROW(multiply(zeros(2, 3), zeros(2, 3)), DimensionError);
    EXPECT_THROW(power(zeros(2, 3), 2), DimensionError);
}

TEST(Arithmetic, NegativePowerThrows) {
    EXPECT_THROW(power(identity(2), -1), ParameterError);
}

TEST(NumericalRank, ZeroMatrix) {
    EXPECT_EQ(numerical_rank(zeros(3, 3), kTol), 0);
}

TEST(NumericalRank, Identity) {
    for (Index n = 1; n <= 6; ++n) {
        EXPECT_EQ(numerical_rank(identity(n), kTol), n);
    }
}

TEST(NumericalRank, MatchesExactElimination) {
    const ComplexMatrix a = m2(I1, 0, 1, 0);
    EXPECT_EQ(numerical_rank(a, kTol), 1);
    EXPECT_EQ(oracle::rank(oracle::ExactMatrix::from(a)), 1);
}

TEST(NumericalRank, InvariantUnderAdjoint) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const ComplexMatrix a = gen_random_index(5, 3, s);
        EXPECT_EQ(numerical_rank(a, kTol), numerical_rank(conjugate_transpose(a), kTol));
    }
}

TEST(NumericalRank, PowerChainIsMonotone) {
    // Past the index the powers are noise relative to themselves, so stop there.
    for (std::uint64_t s = 0; s < 20; ++s) {
        const ComplexMatrix a = gen_random_index(6, 3, s);
        Index prev = 6;
        for (int k = 1; k <= std::max(index(a, kTol), 1); ++k) {
            const ComplexMatrix ak = power(a, k);
            if (vanishes(ak, std::pow(a.norm(), k), kTol)) {
                break;
            }
            const Index r = numerical_rank(ak, kTol);
            EXPECT_LE(r, prev);
            prev = r;
        }
    }
}

TEST(ApproxEqual, SameMatrix) {
    const ComplexMatrix a = gen_plain(3, 2);
    EXPECT_TRUE(approx_equal(a, a, kTol));
}

TEST(ApproxEqual, BelowThreshold) {
    ComplexMatrix e = zeros(3, 3);
    e(0, 1) = 1.0;
    EXPECT_TRUE(approx_equal(identity(3), identity(3) + 1e-15 * e, kTol));
}

TEST(ApproxEqual, AboveThreshold) {
    EXPECT_FALSE(approx_equal(from_rows({{1.0}}), from_rows({{1.1}}), kTol));
}

TEST(ApproxEqual, ShapeMismatchThrows) {
    EXPECT_THROW(approx_equal(identity(2), identity(3), kTol), DimensionError);
}

TEST(SameColumnSpace, Reflexive) {
    const ComplexMatrix a = gen_random_index(4, 2, 5);
    EXPECT_TRUE(same_column_space(a, a, kTol));
}

TEST(SameColumnSpace, OrthogonalRanges) {
    EXPECT_FALSE(same_column_space(m2(1, 0, 0, 0), m2(0, 0, 0, 1), kTol));
}

TEST(SameColumnSpace, MatrixAndItsSquare) {
    const ComplexMatrix a = m2(I1, 0, 1, 0);
    EXPECT_TRUE(same_column_space(a, power(a, 2), kTol));
    const oracle::ExactMatrix e = oracle::ExactMatrix::from(a);
    const oracle::ExactMatrix e2 = e * e;
    oracle::ExactMatrix both(2, 4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            both(i, j) = e(i, j);
            both(i, j + 2) = e2(i, j);
        }
    }
    EXPECT_EQ(oracle::rank(both), oracle::rank(e));
}

TEST(SameColumnSpace, RowCountMismatchThrows) {
    EXPECT_THROW(same_column_space(identity(2), identity(3), kTol), DimensionError);
}

TEST(IsProjection, IdentityAndDiagonal) {
    EXPECT_TRUE(is_projection(identity(3), kTol));
    EXPECT_TRUE(is_projection(test::diag({1, 0}), kTol));
}

TEST(IsProjection, ObliqueIdempotentRejected) {
    EXPECT_FALSE(is_projection(m2(1, 1, 0, 0), kTol));
}

TEST(IsNilpotent, Cases) {
    EXPECT_TRUE(is_nilpotent(m2(0, 1, 0, 0), kTol));
    EXPECT_FALSE(is_nilpotent(identity(2), kTol));
    EXPECT_FALSE(is_nilpotent(test::diag({1e-3, 0}), kTol));
}

TEST(IsNilpotent, LargeScaleNilpotent) {
    ComplexMatrix n = zeros(6, 6);
    for (Index i = 0; i + 1 < 6; ++i) {
        n(i, i + 1) = 1e6;
    }
    EXPECT_TRUE(is_nilpotent(n, kTol));
    n(5, 0) = 1e-3;
    EXPECT_FALSE(is_nilpotent(n, kTol));
}

TEST(NullSpaceBasis, Identity) {
    EXPECT_EQ(null_space_basis(identity(3), kTol).cols(), 0);
}

TEST(NullSpaceBasis, ZeroMatrix) {
    const ComplexMatrix v = null_space_basis(zeros(2, 2), kTol);
    ASSERT_EQ(v.cols(), 2);
    EXPECT_TRUE(near(v.adjoint() * v, identity(2)));
}

TEST(NullSpaceBasis, SingleEquation) {
    const ComplexMatrix v = null_space_basis(from_rows({{1.0, 1.0}}), kTol);
    ASSERT_EQ(v.cols(), 1);
    EXPECT_NEAR(std::abs(v(0, 0)), 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(std::abs(v(0, 0) + v(1, 0)), 0.0, 1e-12);
}

TEST(NullSpaceBasis, OrthonormalAndAnnihilated) {
    Rng rng(4);
    for (int t = 0; t < 10; ++t) {
        const ComplexMatrix f = rng.gaussian_matrix(12, 5);
        const ComplexMatrix a = f * rng.gaussian_matrix(5, 9);
        const ComplexMatrix v = null_space_basis(a, kTol);
        ASSERT_EQ(v.cols(), 9 - numerical_rank(a, kTol));
        EXPECT_TRUE(near(v.adjoint() * v, identity(v.cols()), 1e-12));
        EXPECT_LE((a * v).norm(), kTol.residual_tol * std::max(1.0, a.norm()));
    }
}

TEST(NullSpaceBasis, LargeStackedSystem) {
    // Large rank deficient complex systems, the shape the generators build.
    Rng rng(9);
    const ComplexMatrix f = rng.gaussian_matrix(128, 54);
    const ComplexMatrix a = f * rng.gaussian_matrix(54, 64);
    const ComplexMatrix v = null_space_basis(a, kTol);
    ASSERT_EQ(v.cols(), 10);
    for (Index c = 0; c < v.cols(); ++c) {
        EXPECT_LE((a * v.col(c)).norm(), 1e-10 * a.norm());
    }
}

TEST(TolerancePolicy, Validation) {
    TolerancePolicy p;
    EXPECT_NO_THROW(p.validate());
    p.rank_rel_tol = 1.0;
    EXPECT_THROW(p.validate(), ParameterError);
    p.rank_rel_tol = -1e-3;
    EXPECT_THROW(p.validate(), ParameterError);
}

} // namespace
} // namespace pcore
