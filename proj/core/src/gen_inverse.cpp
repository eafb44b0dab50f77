#include "pcore/gen_inverse.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <string>
#include <utility>

#include <Eigen/LU>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "pcore/errors.hpp"

namespace pcore {

namespace {

void require_square(const ComplexMatrix& a, const char* op) {
    if (a.rows() != a.cols()) {
        throw DimensionError(std::string(op) + ": matrix is " + std::to_string(a.rows()) +
                             "x" + std::to_string(a.cols()) + ", not square");
    }
}

// ||lhs - rhs||_F / max(1, ||rhs||_F)
double residual(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    return (lhs - rhs).norm() / std::max(1.0, rhs.norm());
}

double hermitian_residual(const ComplexMatrix& m) {
    return (m - m.adjoint()).norm() / std::max(1.0, m.norm());
}

std::map<std::string, double> triple_residuals(const ComplexMatrix& a,
                                               const ComplexMatrix& x, int k) {
    const ComplexMatrix ak = power(a, k);
    const ComplexMatrix ax = a * x;
    return {
        {"xa^{k+1}=a^k", residual(x * ak * a, ak)},
        {"ax^2=x", residual(ax * x, x)},
        {"(ax)^*=ax", hermitian_residual(ax)},
    };
}

std::map<std::string, double> drazin_residuals(const ComplexMatrix& a,
                                               const ComplexMatrix& x, int k) {
    const ComplexMatrix ak = power(a, k);
    const ComplexMatrix ax = a * x;
    return {
        {"xa^{k+1}=a^k", residual(x * ak * a, ak)},
        {"ax^2=x", residual(ax * x, x)},
        {"ax=xa", residual(ax, x * a)},
    };
}

ComplexMatrix invert(const ComplexMatrix& m) {
    if (m.size() == 0) {
        return m;
    }
    return Eigen::PartialPivLU<ComplexMatrix>(m).inverse();
}

// U1 T1^{-1} U1^*: the pseudo core inverse in split coordinates.
ComplexMatrix pseudo_core_from_split(const CoreNilpotentSplit& s) {
    const Index n = s.core_basis.rows();
    if (s.core_basis.cols() == 0) {
        return zeros(n, n);
    }
    return s.core_basis * invert(s.core) * s.core_basis.adjoint();
}

// Block upper triangular [[T1, T12], [0, N]] with N nilpotent of order <= k
// has Drazin inverse [[T1^{-1}, Z], [0, 0]], Z = sum_{j<k} T1^{-(j+2)} T12 N^j.
ComplexMatrix drazin_from_split(const CoreNilpotentSplit& s) {
    const Index n = s.core_basis.rows();
    if (s.core_basis.cols() == 0) {
        return zeros(n, n);
    }
    const ComplexMatrix t1_inv = invert(s.core);
    ComplexMatrix x = s.core_basis * t1_inv * s.core_basis.adjoint();
    if (s.complement.cols() == 0) {
        return x;
    }
    ComplexMatrix term = t1_inv * t1_inv * s.coupling;
    ComplexMatrix z = term;
    for (int j = 1; j < s.index; ++j) {
        term = t1_inv * term * s.nilpotent;
        z += term;
    }
    x += s.core_basis * z * s.complement.adjoint();
    return x;
}


void fill_blocks(const ComplexMatrix& a, CoreNilpotentSplit& s) {
    s.core = s.core_basis.adjoint() * a * s.core_basis;
    s.coupling = s.core_basis.adjoint() * a * s.complement;
    s.nilpotent = s.complement.adjoint() * a * s.complement;
}

double invariance_error(const ComplexMatrix& a, const CoreNilpotentSplit& s) {
    return (s.complement.adjoint() * a * s.core_basis).norm();
}

// One Newton step towards an exactly invariant R(a^k): tilt the core basis by
// the solution Z of Z T1 - N Z = E, E the leak of a U1 into the complement.
// Kept only if the leak shrinks.
bool refine_once(const ComplexMatrix& a, CoreNilpotentSplit& s) {
    const double before = invariance_error(a, s);
    if (before == 0.0) {
        return false;
    }
    const ComplexMatrix e = s.complement.adjoint() * a * s.core_basis;
    const ComplexMatrix t1_inv = invert(s.core);
    ComplexMatrix term = e * t1_inv;
    ComplexMatrix z = term;
    for (int j = 1; j < s.index; ++j) {
        term = s.nilpotent * term * t1_inv;
        z += term;
    }
    if (!z.allFinite() || z.norm() > 1e-3) {
        return false;
    }
    const ComplexMatrix tilted = s.core_basis + s.complement * z;
    const Eigen::HouseholderQR<ComplexMatrix> qr(tilted);
    CoreNilpotentSplit next = s;
    next.core_basis = qr.householderQ() * ComplexMatrix::Identity(a.rows(), tilted.cols());
    next.complement = orthonormal_complement(next.core_basis, a.rows());
    if (invariance_error(a, next) >= before) {
        return false;
    }
    fill_blocks(a, next);
    s = std::move(next);
    return true;
}

} // namespace

std::string_view to_string(InverseKind kind) {
    switch (kind) {
    case InverseKind::moore_penrose: return "moore_penrose";
    case InverseKind::one_three: return "one_three";
    case InverseKind::group: return "group";
    case InverseKind::drazin: return "drazin";
    case InverseKind::core: return "core";
    case InverseKind::pseudo_core: return "pseudo_core";
    }
    return "unknown";
}

std::optional<InverseKind> parse_inverse_kind(std::string_view name) {
    static constexpr std::array<std::pair<std::string_view, InverseKind>, 12> table{{
        {"moore_penrose", InverseKind::moore_penrose},
        {"mp", InverseKind::moore_penrose},
        {"pinv", InverseKind::moore_penrose},
        {"one_three", InverseKind::one_three},
        {"13", InverseKind::one_three},
        {"group", InverseKind::group},
        {"drazin", InverseKind::drazin},
        {"core", InverseKind::core},
        {"pseudo_core", InverseKind::pseudo_core},
        {"pcore", InverseKind::pseudo_core},
        {"core_ep", InverseKind::pseudo_core},
        {"core-ep", InverseKind::pseudo_core},
    }};
    for (const auto& [key, kind] : table) {
        if (key == name) {
            return kind;
        }
    }
    return std::nullopt;
}

double GenInverseResult::max_residual() const {
    double m = 0.0;
    for (const auto& [label, value] : residuals) {
        m = std::max(m, value);
    }
    return m;
}

bool GenInverseResult::certified(const TolerancePolicy& tol) const {
    return max_residual() <= tol.residual_tol;
}

int index(const ComplexMatrix& a, const TolerancePolicy& tol) {
    require_square(a, "index");
    // rank(a^j) = rank((a^*)^j), so the chain of ker((a^*)^j) carries the
    // whole rank sequence.
    return kernel_chain(a.adjoint(), tol).stable_at;
}

CoreNilpotentSplit core_nilpotent_split(const ComplexMatrix& a, const TolerancePolicy& tol) {
    require_square(a, "core_nilpotent_split");
    const KernelChain chain = kernel_chain(a.adjoint(), tol);

    CoreNilpotentSplit s;
    s.index = chain.stable_at;
    // ker((a^*)^k) = R(a^k)^⊥.
    s.complement = chain.basis;
    s.core_basis = orthonormal_complement(s.complement, a.rows());
    fill_blocks(a, s);
    for (int step = 0; step < 3 && s.complement.cols() > 0 && s.core_basis.cols() > 0; ++step) {
        if (!refine_once(a, s)) {
            break;
        }
    }
    return s;
}

GenInverseResult moore_penrose(const ComplexMatrix& a, const TolerancePolicy& tol) {
    GenInverseResult r;
    r.kind = InverseKind::moore_penrose;
    if (a.size() == 0) {
        r.inverse = zeros(a.cols(), a.rows());
    } else {
        Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        const double threshold = tol.rank_rel_tol * sv[0];
        Eigen::VectorXcd inv_sv = Eigen::VectorXcd::Zero(sv.size());
        for (Index i = 0; i < sv.size(); ++i) {
            if (sv[i] > threshold) {
                inv_sv[i] = 1.0 / sv[i];
            }
        }
        r.inverse = svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint();
    }
    const ComplexMatrix& x = r.inverse;
    const ComplexMatrix ax = a * x;
    const ComplexMatrix xa = x * a;
    r.residuals = {
        {"p1", residual(ax * a, a)},
        {"p2", residual(xa * x, x)},
        {"p3", hermitian_residual(ax)},
        {"p4", hermitian_residual(xa)},
    };
    return r;
}

GenInverseResult one_three(const ComplexMatrix& a, const TolerancePolicy& tol) {
    require_square(a, "one_three");
    GenInverseResult r = moore_penrose(a, tol);
    r.kind = InverseKind::one_three;
    r.residuals = {{"p1", r.residuals.at("p1")}, {"p3", r.residuals.at("p3")}};
    return r;
}

GenInverseResult group_inverse(const ComplexMatrix& a, const TolerancePolicy& tol) {
    require_square(a, "group_inverse");
    const CoreNilpotentSplit s = core_nilpotent_split(a, tol);
    if (s.index >= 2) {
        throw NoInverseError("group", s.index);
    }
    GenInverseResult r;
    r.kind = InverseKind::group;
    r.index_used = 1;
    r.inverse = drazin_from_split(s);
    const ComplexMatrix& x = r.inverse;
    r.residuals = {
        {"xax=x", residual(x * a * x, x)},
        {"axa=a", residual(a * x * a, a)},
        {"ax=xa", residual(a * x, x * a)},
    };
    return r;
}

GenInverseResult drazin(const ComplexMatrix& a, const TolerancePolicy& tol) {
    require_square(a, "drazin");
    const CoreNilpotentSplit s = core_nilpotent_split(a, tol);
    GenInverseResult r;
    r.kind = InverseKind::drazin;
    r.index_used = s.index;
    r.inverse = drazin_from_split(s);
    r.residuals = drazin_residuals(a, r.inverse, s.index);
    return r;
}

ComplexMatrix spectral_idempotent(const ComplexMatrix& a, const TolerancePolicy& tol) {
    require_square(a, "spectral_idempotent");
    return identity(a.rows()) - a * drazin(a, tol).inverse;
}

GenInverseResult core_inverse(const ComplexMatrix& a, const TolerancePolicy& tol) {
    require_square(a, "core_inverse");
    const CoreNilpotentSplit s = core_nilpotent_split(a, tol);
    if (s.index >= 2) {
        throw NoInverseError("core", s.index);
    }
    const ComplexMatrix group = drazin_from_split(s);
    const ComplexMatrix range_projector = a * moore_penrose(a, tol).inverse;

    GenInverseResult r;
    r.kind = InverseKind::core;
    r.index_used = 1;
    r.inverse = group * range_projector;
    const ComplexMatrix& x = r.inverse;
    r.residuals = {
        {"axa", residual(a * x * a, a)},
        {"range", residual(range_projector * x, x)},
        {"corange", residual(x * range_projector, x)},
    };
    return r;
}

GenInverseResult pseudo_core(const ComplexMatrix& a, const TolerancePolicy& tol) {
    require_square(a, "pseudo_core");
    const CoreNilpotentSplit s = core_nilpotent_split(a, tol);
    GenInverseResult r;
    r.kind = InverseKind::pseudo_core;
    r.index_used = s.index;
    r.inverse = pseudo_core_from_split(s);
    r.residuals = triple_residuals(a, r.inverse, s.index);
    return r;
}

std::map<std::string, double> verify_defining_triple(const ComplexMatrix& a,
                                                     const ComplexMatrix& x, int k) {
    if (k < 1) {
        throw ParameterError("verify_defining_triple: k must be >= 1, got " +
                             std::to_string(k));
    }
    require_square(a, "verify_defining_triple");
    if (x.rows() != a.rows() || x.cols() != a.cols()) {
        throw DimensionError("verify_defining_triple: inverse shape does not match");
    }
    return triple_residuals(a, x, k);
}

StarDmp is_star_dmp(const ComplexMatrix& a, const TolerancePolicy& tol) {
    require_square(a, "is_star_dmp");
    const int n = static_cast<int>(a.rows());
    for (int p = std::max(index(a, tol), 1); p <= n; ++p) {
        const ComplexMatrix ap = power(a, p);
        if (vanishes(ap, std::pow(a.norm(), p), tol)) {
            return {true, p};
        }
        if (index(ap, tol) > 1) {
            continue;
        }
        const ComplexMatrix mp = moore_penrose(ap, tol).inverse;
        const ComplexMatrix group = group_inverse(ap, tol).inverse;
        if (approx_equal(mp, group, tol)) {
            return {true, p};
        }
    }
    return {false, 0};
}

} // namespace pcore
