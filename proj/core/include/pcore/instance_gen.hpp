#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "pcore/matrix_kernel.hpp"

namespace pcore {

enum class InstanceKind {
    plain,
    with_index,
    commutant_pair,
    star_dmp,
    annihilating_pair,
    lemma_2_5,
    intertwined_4_1,
    intertwined_4_3,
    zero_product_4_5,
    zero_product_4_6,
};

std::string_view to_string(InstanceKind kind);

/// Largest dimension any generator accepts (8 per block for block generators).
inline constexpr Index kMaxGeneratorDim = 16;
inline constexpr Index kMaxBlockDim = 8;

struct InstanceSpec {
    InstanceKind kind = InstanceKind::plain;
    std::vector<Index> dims;
    std::optional<int> target_index;
    std::uint64_t seed = 0;
    double scale = 1.0;
};

/// Complex Gaussian sampling on top of a seeded mt19937_64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi);
    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);
    bool bernoulli(double p);
    /// Standard complex Gaussian: real and imaginary parts N(0, 1/2).
    Complex gaussian();
    ComplexMatrix gaussian_matrix(Index rows, Index cols);
    /// Haar-like unitary from the QR factorization of a Gaussian matrix.
    ComplexMatrix unitary(Index n);
    /// Fresh seed for a nested generator.
    std::uint64_t next_seed();

private:
    std::mt19937_64 engine_;
};

/// splitmix64 mix of (master, index); per-trial seeds of a campaign.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

using LinearMap = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// Orthonormal basis of the common kernel of `maps`, each acting on
/// rows x cols matrices; columns are column-major vectorizations.
ComplexMatrix constraint_nullspace(Index rows, Index cols, const std::vector<LinearMap>& maps);

/// Random element of the span of `basis` reshaped to rows x cols, with
/// Frobenius norm scale * U[0.5, 2]. Zero when the basis is empty.
ComplexMatrix sample_from_basis(const ComplexMatrix& basis, Index rows, Index cols, Rng& rng,
                                double scale);

ComplexMatrix gen_plain(Index n, std::uint64_t seed, double scale = 1.0);

/// S (K ⊕ N) S^{-1} with K r x r invertible, N nilpotent of order exactly k
/// (N = 0 when k = 1). Requires k = 0 iff r = n, and r + k <= n otherwise.
ComplexMatrix gen_with_index(Index n, int k, Index r, std::uint64_t seed, double scale = 1.0);

/// gen_with_index with k and r drawn at random (k <= max_index).
ComplexMatrix gen_random_index(Index n, int max_index, std::uint64_t seed, double scale = 1.0);

struct MatrixPair {
    ComplexMatrix a;
    ComplexMatrix b;
};

/// ab = ba and a^*b = ba^* by construction.
MatrixPair gen_commutant_pair(Index n, std::uint64_t seed,
                              std::optional<int> target_index = std::nullopt,
                              double scale = 1.0);

/// b sampled from the *-commutant of a fixed a.
ComplexMatrix sample_star_commutant(const ComplexMatrix& a, Rng& rng, double scale = 1.0);

/// U (K ⊕ N) U^* with K normal invertible r x r and N nilpotent of order k.
ComplexMatrix gen_star_dmp(Index n, Index r, int k, std::uint64_t seed, double scale = 1.0);

/// a = P X P, b = Q Y Q for complementary orthogonal projections P, Q.
MatrixPair gen_annihilating_pair(Index n, std::uint64_t seed, double scale = 1.0);

/// Mixture of unrelated pairs and pairs with R(b) inside R(a^k).
MatrixPair gen_arbitrary_pair(Index n, std::uint64_t seed, double scale = 1.0);

struct TriangularInstance {
    ComplexMatrix a;
    ComplexMatrix b;
    ComplexMatrix d;
    bool degenerate = false;
};

/// b in the kernel of b -> sum_{i=1}^{m} a^{i-1} a^π b d^{m-i}, m = i(a) + i(d) + 1.
TriangularInstance gen_lemma_2_5_instance(Index na, Index nd, std::uint64_t seed,
                                          double scale = 1.0);

struct BlockInstance {
    ComplexMatrix A;
    ComplexMatrix B;
    ComplexMatrix C;
    ComplexMatrix D;
    bool degenerate = false;
};

/// (A^*, C^*, B^*, D^*): the blocks of M^*.
BlockInstance dual(const BlockInstance& m);

BlockInstance gen_intertwined_4_1(Index nA, Index nD, std::uint64_t seed, double scale = 1.0);
BlockInstance gen_intertwined_4_3(Index nA, Index nD, std::uint64_t seed, double scale = 1.0);
BlockInstance gen_zero_product_4_5(Index nA, Index nD, std::uint64_t seed, double scale = 1.0);
/// BC = CB = 0, AB = BD, A^*B = BD^*, sum_{i<=i(A)} C A^{i-1} A^π = 0.
BlockInstance gen_zero_product_4_6(Index nA, Index nD, std::uint64_t seed, double scale = 1.0);

} // namespace pcore
