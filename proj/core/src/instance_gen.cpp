#include "pcore/instance_gen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "pcore/errors.hpp"
#include "pcore/gen_inverse.hpp"

namespace pcore {

namespace {

constexpr int kRetryCap = 64;

// Kernel threshold for constraint systems; well under the default rank
// tolerance so that sampled instances pass hypothesis checks with margin.
TolerancePolicy constraint_policy() {
    TolerancePolicy p;
    p.rank_rel_tol = 1e-12;
    return p;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

void require_dim(Index n, Index cap, const char* who) {
    if (n < 1 || n > cap) {
        throw ParameterError(std::string(who) + ": dimension " + std::to_string(n) +
                             " outside [1, " + std::to_string(cap) + "]");
    }
}

ComplexMatrix direct_sum(const ComplexMatrix& x, const ComplexMatrix& y) {
    ComplexMatrix out = zeros(x.rows() + y.rows(), x.cols() + y.cols());
    out.topLeftCorner(x.rows(), x.cols()) = x;
    out.bottomRightCorner(y.rows(), y.cols()) = y;
    return out;
}

Complex polar(Rng& rng, double lo, double hi) {
    return std::polar(rng.uniform(lo, hi), rng.uniform(0.0, 2.0 * std::numbers::pi));
}

double log_uniform(Rng& rng, double lo, double hi) {
    return std::exp(rng.uniform(std::log(lo), std::log(hi)));
}

// Nilpotent of order exactly k on C^size: Jordan blocks, the first of size k,
// with random superdiagonal entries of modulus in [0.5, 2].
ComplexMatrix nilpotent_part(Index size, int k, Rng& rng) {
    ComplexMatrix n = zeros(size, size);
    Index start = 0;
    bool first = true;
    while (start < size) {
        const Index remaining = size - start;
        const Index block = first ? std::min<Index>(k, remaining)
                                  : rng.uniform_int(1, static_cast<int>(std::min<Index>(k, remaining)));
        for (Index j = 0; j + 1 < block; ++j) {
            n(start + j, start + j + 1) = polar(rng, 0.5, 2.0);
        }
        start += block;
        first = false;
    }
    return n;
}

void check_index_recipe(Index n, int k, Index r, const char* who) {
    require_dim(n, kMaxGeneratorDim, who);
    const bool ok = k >= 0 && r >= 0 &&
                    ((k == 0 && r == n) || (k >= 1 && r + k <= n));
    if (!ok) {
        throw ParameterError(std::string(who) + ": infeasible (n=" + std::to_string(n) +
                             ", k=" + std::to_string(k) + ", r=" + std::to_string(r) + ")");
    }
}

struct Recipe {
    int k = 0;
    Index r = 0;
};

Recipe random_recipe(Index n, int max_index, Rng& rng) {
    Recipe out;
    out.k = rng.uniform_int(0, static_cast<int>(std::min<Index>(max_index, n)));
    out.r = out.k == 0 ? n : rng.uniform_int(0, static_cast<int>(n - out.k));
    return out;
}

ComplexMatrix vec_unit(Index rows, Index cols, Index flat) {
    ComplexMatrix e = zeros(rows, cols);
    e(flat % rows, flat / rows) = 1.0;
    return e;
}

// A = U_A (E ⊕ A') U_A^*, D = U_D (E ⊕ D') U_D^*: the shared block E is what
// lets nonzero intertwiners exist.
struct SharedBlocks {
    ComplexMatrix A;
    ComplexMatrix D;
};

SharedBlocks shared_blocks(Index nA, Index nD, double nilpotent_probability, Rng& rng,
                           double scale, bool a_rest_has_core = false) {
    const Index cap = std::min(nA, nD);
    const Index s = rng.uniform_int(1, static_cast<int>(std::max<Index>(1, cap - 1)));
    ComplexMatrix e;
    if (rng.bernoulli(nilpotent_probability)) {
        e = gen_with_index(s, rng.uniform_int(1, static_cast<int>(s)), 0, rng.next_seed(), scale);
    } else {
        e = gen_random_index(s, 3, rng.next_seed(), scale);
    }
    auto side = [&](Index n, bool with_core) {
        ComplexMatrix rest = zeros(0, 0);
        if (n > s && with_core) {
            const Index free = n - s;
            const int k = rng.uniform_int(0, static_cast<int>(std::min<Index>(3, free - 1)));
            const Index r = k == 0 ? free : rng.uniform_int(1, static_cast<int>(free) - k);
            rest = gen_with_index(free, k, r, rng.next_seed(), scale);
        } else if (n > s) {
            rest = gen_random_index(n - s, 3, rng.next_seed(), scale);
        }
        const ComplexMatrix u = rng.unitary(n);
        return ComplexMatrix(u * direct_sum(e, rest) * u.adjoint());
    };
    SharedBlocks out;
    out.A = side(nA, a_rest_has_core);
    out.D = side(nD, false);
    return out;
}

void require_blocks(Index nA, Index nD, const char* who) {
    require_dim(nA, kMaxBlockDim, who);
    require_dim(nD, kMaxBlockDim, who);
}

// B with AB = BD and A^*B = BD^*.
ComplexMatrix star_intertwiners_right(const ComplexMatrix& A, const ComplexMatrix& D) {
    return constraint_nullspace(A.rows(), D.rows(),
                                {[&](const ComplexMatrix& x) { return ComplexMatrix(A * x - x * D); },
                                 [&](const ComplexMatrix& x) {
                                     return ComplexMatrix(A.adjoint() * x - x * D.adjoint());
                                 }});
}

// C with DC = CA and D^*C = CA^*.
ComplexMatrix star_intertwiners_left(const ComplexMatrix& A, const ComplexMatrix& D) {
    return star_intertwiners_right(D, A);
}

} // namespace

std::string_view to_string(InstanceKind kind) {
    switch (kind) {
    case InstanceKind::plain: return "plain";
    case InstanceKind::with_index: return "with_index";
    case InstanceKind::commutant_pair: return "commutant_pair";
    case InstanceKind::star_dmp: return "star_dmp";
    case InstanceKind::annihilating_pair: return "annihilating_pair";
    case InstanceKind::lemma_2_5: return "lemma_2_5";
    case InstanceKind::intertwined_4_1: return "intertwined_4_1";
    case InstanceKind::intertwined_4_3: return "intertwined_4_3";
    case InstanceKind::zero_product_4_5: return "zero_product_4_5";
    case InstanceKind::zero_product_4_6: return "zero_product_4_6";
    }
    return "unknown";
}

double Rng::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

int Rng::uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

bool Rng::bernoulli(double p) { return uniform(0.0, 1.0) < p; }

Complex Rng::gaussian() {
    std::normal_distribution<double> dist(0.0, std::sqrt(0.5));
    const double re = dist(engine_);
    const double im = dist(engine_);
    return {re, im};
}

ComplexMatrix Rng::gaussian_matrix(Index rows, Index cols) {
    ComplexMatrix m(rows, cols);
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            m(i, j) = gaussian();
        }
    }
    return m;
}

ComplexMatrix Rng::unitary(Index n) {
    if (n == 0) {
        return zeros(0, 0);
    }
    const ComplexMatrix g = gaussian_matrix(n, n);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix& r = qr.matrixQR();
    for (Index j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0.0) {
            q.col(j) *= d / std::abs(d);
        }
    }
    return q;
}

std::uint64_t Rng::next_seed() { return engine_(); }

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index));
}

ComplexMatrix constraint_nullspace(Index rows, Index cols, const std::vector<LinearMap>& maps) {
    const Index unknowns = rows * cols;
    if (maps.empty()) {
        return identity(unknowns);
    }
    std::vector<ComplexMatrix> images;
    Index height = 0;
    for (Index flat = 0; flat < unknowns; ++flat) {
        const ComplexMatrix e = vec_unit(rows, cols, flat);
        for (const LinearMap& f : maps) {
            images.push_back(f(e));
            if (flat == 0) {
                height += images.back().size();
            }
        }
    }
    ComplexMatrix system(height, unknowns);
    for (Index flat = 0; flat < unknowns; ++flat) {
        Index offset = 0;
        for (std::size_t k = 0; k < maps.size(); ++k) {
            const ComplexMatrix& img = images[static_cast<std::size_t>(flat) * maps.size() + k];
            system.block(offset, flat, img.size(), 1) =
                Eigen::Map<const Eigen::VectorXcd>(img.data(), img.size());
            offset += img.size();
        }
    }
    // equal weight per constraint, so a large map cannot mask a small one
    Index offset = 0;
    for (std::size_t k = 0; k < maps.size(); ++k) {
        const Index h = images[k].size();
        auto block = system.middleRows(offset, h);
        const double w = block.norm();
        if (w > 0.0) {
            block /= w;
        }
        offset += h;
    }
    return null_space_basis(system, constraint_policy());
}

ComplexMatrix sample_from_basis(const ComplexMatrix& basis, Index rows, Index cols, Rng& rng,
                                double scale) {
    if (basis.cols() == 0) {
        return zeros(rows, cols);
    }
    const Eigen::VectorXcd v = basis * rng.gaussian_matrix(basis.cols(), 1);
    ComplexMatrix m = Eigen::Map<const ComplexMatrix>(v.data(), rows, cols);
    const double target = scale * rng.uniform(0.5, 2.0);
    return m * (target / m.norm());
}

ComplexMatrix gen_plain(Index n, std::uint64_t seed, double scale) {
    require_dim(n, kMaxGeneratorDim, "gen_plain");
    Rng rng(seed);
    return scale * rng.gaussian_matrix(n, n);
}

ComplexMatrix gen_with_index(Index n, int k, Index r, std::uint64_t seed, double scale) {
    check_index_recipe(n, k, r, "gen_with_index");
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw ParameterError("gen_with_index: scale must be positive");
    }
    Rng rng(seed);
    Eigen::VectorXd core_sv(r);
    for (Index i = 0; i < r; ++i) {
        core_sv[i] = log_uniform(rng, 0.1, 10.0);
    }
    const ComplexMatrix core = rng.unitary(r) * core_sv.cast<Complex>().asDiagonal() *
                               rng.unitary(r).adjoint();
    const ComplexMatrix nil = nilpotent_part(n - r, std::max(k, 1), rng);

    Eigen::VectorXd s_sv(n);
    for (Index i = 0; i < n; ++i) {
        s_sv[i] = rng.uniform(0.5, 2.0);
    }
    const ComplexMatrix u = rng.unitary(n);
    const ComplexMatrix v = rng.unitary(n);
    const ComplexMatrix s = u * s_sv.cast<Complex>().asDiagonal() * v.adjoint();
    const ComplexMatrix s_inv = v * s_sv.cwiseInverse().cast<Complex>().asDiagonal() * u.adjoint();
    return scale * (s * direct_sum(core, nil) * s_inv);
}

ComplexMatrix gen_random_index(Index n, int max_index, std::uint64_t seed, double scale) {
    require_dim(n, kMaxGeneratorDim, "gen_random_index");
    Rng rng(seed);
    const Recipe recipe = random_recipe(n, max_index, rng);
    return gen_with_index(n, recipe.k, recipe.r, rng.next_seed(), scale);
}

ComplexMatrix sample_star_commutant(const ComplexMatrix& a, Rng& rng, double scale) {
    const Index n = a.rows();
    const ComplexMatrix basis = constraint_nullspace(
        n, n, {[&](const ComplexMatrix& x) { return ComplexMatrix(a * x - x * a); },
               [&](const ComplexMatrix& x) {
                   return ComplexMatrix(a.adjoint() * x - x * a.adjoint());
               }});
    return sample_from_basis(basis, n, n, rng, scale);
}

MatrixPair gen_commutant_pair(Index n, std::uint64_t seed, std::optional<int> target_index,
                              double scale) {
    require_dim(n, kMaxGeneratorDim, "gen_commutant_pair");
    Rng rng(seed);
    const int k = target_index ? *target_index
                               : rng.uniform_int(0, static_cast<int>(std::min<Index>(3, n)));
    if (k < 0 || k > n) {
        throw ParameterError("gen_commutant_pair: target index " + std::to_string(k) +
                             " outside [0, " + std::to_string(n) + "]");
    }
    // a = W (a0 ⊕ c I_s) W^*; the scalar block widens the commutant.
    const Index s = rng.uniform_int(0, static_cast<int>(std::min<Index>(n / 2, n - std::max(k, 1))));
    const Index n0 = n - s;
    const Index r = k == 0 ? n0 : rng.uniform_int(0, static_cast<int>(n0 - k));
    const ComplexMatrix a0 = gen_with_index(n0, k, r, rng.next_seed(), scale);
    const ComplexMatrix w = rng.unitary(n);
    const Complex c = scale * polar(rng, 0.5, 2.0);
    ComplexMatrix cs = zeros(s, s);
    cs.diagonal().setConstant(c);

    MatrixPair out;
    out.a = w * direct_sum(a0, cs) * w.adjoint();
    out.b = sample_star_commutant(out.a, rng, scale);

    // Shift b so that a + b is singular on the a0 block: a + b then has a
    // nontrivial index and either side of the additive criterion can fail.
    if (rng.bernoulli(0.5)) {
        ComplexMatrix bw = w.adjoint() * out.b * w;
        const ComplexMatrix b0 = bw.topLeftCorner(n0, n0);
        const Complex mu = b0.trace() / static_cast<double>(n0);
        const Eigen::VectorXcd eig = Eigen::ComplexEigenSolver<ComplexMatrix>(a0, false).eigenvalues();
        Complex kappa = eig[rng.uniform_int(0, static_cast<int>(eig.size()) - 1)];
        // Eigenvalues of the invertible part have modulus >= 0.1 * scale; the
        // rest belong to the nilpotent part and are zero up to rounding.
        if (std::abs(kappa) < 1e-2 * scale) {
            kappa = 0.0;
        }
        // When the a0 block of b is scalar, rebuild it exactly so the shift
        // cancels it without leaving rounding noise behind.
        const double tiny = 1e-10 * bw.norm();
        if ((b0 - mu * identity(n0)).norm() <= tiny &&
            bw.topRightCorner(n0, s).norm() <= tiny && bw.bottomLeftCorner(s, n0).norm() <= tiny) {
            bw.topLeftCorner(n0, n0) = mu * identity(n0);
            bw.topRightCorner(n0, s).setZero();
            bw.bottomLeftCorner(s, n0).setZero();
        }
        bw -= (kappa + mu) * identity(n);
        out.b = w * bw * w.adjoint();
    }
    return out;
}

ComplexMatrix gen_star_dmp(Index n, Index r, int k, std::uint64_t seed, double scale) {
    check_index_recipe(n, k, r, "gen_star_dmp");
    Rng rng(seed);
    Eigen::VectorXcd lambda(r);
    for (Index i = 0; i < r; ++i) {
        lambda[i] = scale * std::polar(log_uniform(rng, 0.1, 10.0),
                                       rng.uniform(0.0, 2.0 * std::numbers::pi));
    }
    const ComplexMatrix v = rng.unitary(r);
    const ComplexMatrix core = v * lambda.asDiagonal() * v.adjoint();
    const ComplexMatrix nil = scale * nilpotent_part(n - r, std::max(k, 1), rng);
    const ComplexMatrix u = rng.unitary(n);
    return u * direct_sum(core, nil) * u.adjoint();
}

MatrixPair gen_annihilating_pair(Index n, std::uint64_t seed, double scale) {
    require_dim(n, kMaxGeneratorDim, "gen_annihilating_pair");
    if (n < 2) {
        throw ParameterError("gen_annihilating_pair: n must be >= 2");
    }
    Rng rng(seed);
    const Index s = rng.uniform_int(1, static_cast<int>(n - 1));
    const ComplexMatrix w = rng.unitary(n);
    const ComplexMatrix w1 = w.leftCols(s);
    const ComplexMatrix w2 = w.rightCols(n - s);
    const ComplexMatrix x = gen_random_index(s, 3, rng.next_seed(), scale);
    const ComplexMatrix y = gen_random_index(n - s, 3, rng.next_seed(), scale);
    return {w1 * x * w1.adjoint(), w2 * y * w2.adjoint()};
}

MatrixPair gen_arbitrary_pair(Index n, std::uint64_t seed, double scale) {
    require_dim(n, kMaxGeneratorDim, "gen_arbitrary_pair");
    Rng rng(seed);
    const Recipe recipe = random_recipe(n, 3, rng);
    MatrixPair out;
    out.a = gen_with_index(n, recipe.k, recipe.r, rng.next_seed(), scale);
    switch (rng.uniform_int(0, 2)) {
    case 0:
        out.b = scale * rng.gaussian_matrix(n, n);
        break;
    case 1: {
        // R(b) inside R(a^k): both annihilation conditions hold.
        const ComplexMatrix ak = power(out.a, recipe.k);
        out.b = ak * rng.gaussian_matrix(n, n);
        const double nb = out.b.norm();
        if (nb > 0.0) {
            out.b *= scale / nb;
        }
        break;
    }
    default:
        out.b = scale * rng.gaussian_matrix(n, 1) * rng.gaussian_matrix(1, n);
        break;
    }
    return out;
}

TriangularInstance gen_lemma_2_5_instance(Index na, Index nd, std::uint64_t seed, double scale) {
    require_blocks(na, nd, "gen_lemma_2_5_instance");
    Rng rng(seed);
    const TolerancePolicy tol;
    TriangularInstance out;
    out.a = gen_random_index(na, 3, rng.next_seed(), scale);
    out.d = gen_random_index(nd, 3, rng.next_seed(), scale);
    const int ka = index(out.a, tol);
    const int kd = index(out.d, tol);
    const int m = ka + kd + 1;

    const ComplexMatrix a_pi = spectral_idempotent(out.a, tol);
    std::vector<ComplexMatrix> left;
    ComplexMatrix head = a_pi;
    for (int i = 1; i <= std::min(m, ka); ++i) {
        left.push_back(head);
        head = out.a * head;
    }
    std::vector<ComplexMatrix> right{identity(nd)};
    for (int j = 1; j < m; ++j) {
        right.push_back(right.back() * out.d);
    }
    const LinearMap sum = [&](const ComplexMatrix& x) {
        ComplexMatrix acc = zeros(na, nd);
        for (std::size_t i = 0; i < left.size(); ++i) {
            acc += left[i] * x * right[static_cast<std::size_t>(m) - 1 - i];
        }
        return acc;
    };
    const ComplexMatrix basis = constraint_nullspace(na, nd, {sum});
    out.degenerate = basis.cols() == 0;
    out.b = sample_from_basis(basis, na, nd, rng, scale);
    return out;
}

BlockInstance dual(const BlockInstance& m) {
    return {m.A.adjoint(), m.C.adjoint(), m.B.adjoint(), m.D.adjoint(), m.degenerate};
}

BlockInstance gen_intertwined_4_1(Index nA, Index nD, std::uint64_t seed, double scale) {
    require_blocks(nA, nD, "gen_intertwined_4_1");
    Rng rng(seed);
    const TolerancePolicy tol;
    const SharedBlocks blocks = shared_blocks(nA, nD, 0.85, rng, scale);
    BlockInstance out{blocks.A, zeros(nA, nD), zeros(nD, nA), blocks.D, true};
    const ComplexMatrix b_basis = star_intertwiners_right(out.A, out.D);
    const ComplexMatrix c_basis = star_intertwiners_left(out.A, out.D);
    const ComplexMatrix pa = pseudo_core(out.A, tol).inverse;
    const ComplexMatrix pd = pseudo_core(out.D, tol).inverse;

    out.B = sample_from_basis(b_basis, nA, nD, rng, scale);
    if (b_basis.cols() == 0 || c_basis.cols() == 0) {
        return out;
    }
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        const ComplexMatrix b = sample_from_basis(b_basis, nA, nD, rng, scale);
        const ComplexMatrix c = sample_from_basis(c_basis, nD, nA, rng, scale);
        const double ref = pa.norm() * b.norm() * pd.norm() * c.norm();
        if (is_nilpotent(pa * b * pd * c, tol, ref)) {
            out.B = b;
            out.C = c;
            out.degenerate = false;
            return out;
        }
    }
    return out;
}

BlockInstance gen_intertwined_4_3(Index nA, Index nD, std::uint64_t seed, double scale) {
    require_blocks(nA, nD, "gen_intertwined_4_3");
    Rng rng(seed);
    const TolerancePolicy tol;
    const SharedBlocks blocks = shared_blocks(nA, nD, 0.85, rng, scale);
    BlockInstance out{blocks.A, zeros(nA, nD), zeros(nD, nA), blocks.D, true};
    const ComplexMatrix& A = out.A;
    const ComplexMatrix& D = out.D;
    const ComplexMatrix b_basis = star_intertwiners_right(A, D);
    const ComplexMatrix c_basis = constraint_nullspace(
        nD, nA, {[&](const ComplexMatrix& y) { return ComplexMatrix(D * y - y * A); }});

    out.B = sample_from_basis(b_basis, nA, nD, rng, scale);
    if (b_basis.cols() == 0 || c_basis.cols() == 0) {
        return out;
    }
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        const ComplexMatrix b = sample_from_basis(b_basis, nA, nD, rng, scale);
        const ComplexMatrix c = sample_from_basis(c_basis, nD, nA, rng, scale);
        const ComplexMatrix pcb = pseudo_core(c * b, tol).inverse;
        const ComplexMatrix pbc = pseudo_core(b * c, tol).inverse;
        const double ref =
            b.norm() * pcb.norm() * D.norm() * c.norm() * pbc.norm() * A.norm();
        if (is_nilpotent(b * pcb * D * c * pbc * A, tol, ref)) {
            out.B = b;
            out.C = c;
            out.degenerate = false;
            return out;
        }
    }
    return out;
}

BlockInstance gen_zero_product_4_5(Index nA, Index nD, std::uint64_t seed, double scale) {
    require_blocks(nA, nD, "gen_zero_product_4_5");
    Rng rng(seed);
    const TolerancePolicy tol;
    const SharedBlocks blocks = shared_blocks(nA, nD, 0.5, rng, scale, true);
    BlockInstance out{blocks.A, zeros(nA, nD), zeros(nD, nA), blocks.D, false};
    const ComplexMatrix& A = out.A;
    const ComplexMatrix& D = out.D;

    const ComplexMatrix c_basis = star_intertwiners_left(A, D);
    out.C = sample_from_basis(c_basis, nD, nA, rng, scale);

    const int ka = index(A, tol);
    const int m = ka + index(D, tol) + 1;
    const ComplexMatrix a_pi = spectral_idempotent(A, tol);
    std::vector<ComplexMatrix> left;
    ComplexMatrix head = a_pi;
    for (int i = 1; i <= std::min(m, ka); ++i) {
        left.push_back(head);
        head = A * head;
    }
    std::vector<ComplexMatrix> right{identity(nD)};
    for (int j = 1; j < m; ++j) {
        right.push_back(right.back() * D);
    }
    const ComplexMatrix& C = out.C;
    const ComplexMatrix b_basis = constraint_nullspace(
        nA, nD,
        {[&](const ComplexMatrix& x) { return ComplexMatrix(x * C); },
         [&](const ComplexMatrix& x) { return ComplexMatrix(C * x); },
         [&](const ComplexMatrix& x) {
             ComplexMatrix acc = zeros(nA, nD);
             for (std::size_t i = 0; i < left.size(); ++i) {
                 acc += left[i] * x * right[static_cast<std::size_t>(m) - 1 - i];
             }
             return acc;
         }});
    out.B = sample_from_basis(b_basis, nA, nD, rng, scale);
    out.degenerate = c_basis.cols() == 0 || b_basis.cols() == 0;
    return out;
}

BlockInstance gen_zero_product_4_6(Index nA, Index nD, std::uint64_t seed, double scale) {
    require_blocks(nA, nD, "gen_zero_product_4_6");
    Rng rng(seed);
    const TolerancePolicy tol;
    const SharedBlocks blocks = shared_blocks(nA, nD, 0.5, rng, scale, true);
    BlockInstance out{blocks.A, zeros(nA, nD), zeros(nD, nA), blocks.D, false};
    const ComplexMatrix& A = out.A;

    const ComplexMatrix b_basis = star_intertwiners_right(A, out.D);
    out.B = sample_from_basis(b_basis, nA, nD, rng, scale);

    const int ka = index(A, tol);
    const ComplexMatrix a_pi = spectral_idempotent(A, tol);
    std::vector<ComplexMatrix> tail;
    ComplexMatrix a_power = identity(nA);
    for (int i = 1; i <= ka; ++i) {
        tail.push_back(a_power * a_pi);
        a_power = a_power * A;
    }
    const ComplexMatrix& B = out.B;
    const ComplexMatrix c_basis = constraint_nullspace(
        nD, nA,
        {[&](const ComplexMatrix& y) { return ComplexMatrix(B * y); },
         [&](const ComplexMatrix& y) { return ComplexMatrix(y * B); },
         [&](const ComplexMatrix& y) {
             ComplexMatrix acc = zeros(nD, nA);
             for (const ComplexMatrix& t : tail) {
                 acc += y * t;
             }
             return acc;
         }});
    out.C = sample_from_basis(c_basis, nD, nA, rng, scale);
    out.degenerate = b_basis.cols() == 0 || c_basis.cols() == 0;
    return out;
}

} // namespace pcore
