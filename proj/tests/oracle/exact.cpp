#include "exact.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <utility>

namespace oracle {

GaussRational operator+(const GaussRational& x, const GaussRational& y) {
    return {x.re + y.re, x.im + y.im};
}

GaussRational operator-(const GaussRational& x, const GaussRational& y) {
    return {x.re - y.re, x.im - y.im};
}

GaussRational operator*(const GaussRational& x, const GaussRational& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

GaussRational operator/(const GaussRational& x, const GaussRational& y) {
    const Rational den = y.re * y.re + y.im * y.im;
    if (den == 0) {
        throw std::domain_error("oracle: division by zero");
    }
    const GaussRational num = x * y.conj();
    return {num.re / den, num.im / den};
}

bool operator==(const GaussRational& x, const GaussRational& y) {
    return x.re == y.re && x.im == y.im;
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = GaussRational(1);
    }
    return m;
}

namespace {

Rational exact_double(double v) {
    if (!std::isfinite(v)) {
        throw std::domain_error("oracle: non-finite entry");
    }
    int exp = 0;
    const double mant = std::frexp(v, &exp);
    // 53-bit mantissa scaled to an integer
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    Rational r(scaled);
    const int shift = exp - 53;
    Rational two(2);
    Rational factor(1);
    for (int i = 0; i < std::abs(shift); ++i) {
        factor *= two;
    }
    return shift >= 0 ? Rational(r * factor) : Rational(r / factor);
}

} // namespace

ExactMatrix ExactMatrix::from(const pcore::ComplexMatrix& m) {
    ExactMatrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int i = 0; i < out.rows; ++i) {
        for (int j = 0; j < out.cols; ++j) {
            out(i, j) = {exact_double(m(i, j).real()), exact_double(m(i, j).imag())};
        }
    }
    return out;
}

pcore::ComplexMatrix ExactMatrix::to_complex() const {
    pcore::ComplexMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const GaussRational& v = (*this)(i, j);
            out(i, j) = {v.re.convert_to<double>(), v.im.convert_to<double>()};
        }
    }
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols != b.rows) {
        throw std::invalid_argument("oracle: shape mismatch in product");
    }
    ExactMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int k = 0; k < a.cols; ++k) {
            if (a(i, k).is_zero()) {
                continue;
            }
            for (int j = 0; j < b.cols; ++j) {
                out(i, j) = out(i, j) + a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        out.data[i] = a.data[i] - b.data[i];
    }
    return out;
}

ExactMatrix adjoint(const ExactMatrix& a) {
    ExactMatrix out(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) {
            out(j, i) = a(i, j).conj();
        }
    }
    return out;
}

ExactMatrix power(const ExactMatrix& a, int k) {
    ExactMatrix out = ExactMatrix::identity(a.rows);
    for (int i = 0; i < k; ++i) {
        out = out * a;
    }
    return out;
}

bool is_zero(const ExactMatrix& a) {
    for (const auto& v : a.data) {
        if (!v.is_zero()) {
            return false;
        }
    }
    return true;
}

namespace {

// Row echelon form in place over any field-like scalar; returns pivot columns.
template <typename T>
std::vector<int> echelon(std::vector<std::vector<T>>& m, int cols,
                         const std::function<bool(const T&)>& zero) {
    std::vector<int> pivots;
    int row = 0;
    const int rows = static_cast<int>(m.size());
    for (int c = 0; c < cols && row < rows; ++c) {
        int p = row;
        while (p < rows && zero(m[p][c])) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[row]);
        for (int r = 0; r < rows; ++r) {
            if (r == row || zero(m[r][c])) {
                continue;
            }
            const T f = m[r][c] / m[row][c];
            for (int j = c; j < static_cast<int>(m[r].size()); ++j) {
                m[r][j] = m[r][j] - f * m[row][j];
            }
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<GaussRational>> rows_of(const ExactMatrix& a) {
    std::vector<std::vector<GaussRational>> m(static_cast<std::size_t>(a.rows));
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) {
            m[static_cast<std::size_t>(i)].push_back(a(i, j));
        }
    }
    return m;
}

const std::function<bool(const GaussRational&)> kGaussZero = [](const GaussRational& v) {
    return v.is_zero();
};

} // namespace

std::vector<int> pivot_columns(const ExactMatrix& a) {
    auto m = rows_of(a);
    return echelon(m, a.cols, kGaussZero);
}

int rank(const ExactMatrix& a) {
    return static_cast<int>(pivot_columns(a).size());
}

std::optional<ExactMatrix> inverse(const ExactMatrix& a) {
    const int n = a.rows;
    std::vector<std::vector<GaussRational>> m = rows_of(a);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m[static_cast<std::size_t>(i)].push_back(i == j ? GaussRational(1) : GaussRational());
        }
    }
    const std::vector<int> pivots = echelon(m, n, kGaussZero);
    if (static_cast<int>(pivots.size()) < n) {
        return std::nullopt;
    }
    ExactMatrix out(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& row = m[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            out(i, j) = row[static_cast<std::size_t>(n + j)] / row[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

int index(const ExactMatrix& a) {
    int k = 0;
    ExactMatrix p = ExactMatrix::identity(a.rows);
    int r = a.rows;
    while (true) {
        p = p * a;
        const int next = rank(p);
        if (next == r) {
            return k;
        }
        r = next;
        ++k;
    }
}

std::optional<ExactMatrix> pseudo_core(const ExactMatrix& a) {
    const int n = a.rows;
    const int k = index(a);
    const ExactMatrix ak = power(a, k);
    const ExactMatrix ak1 = ak * a;

    // orthogonal projector onto R(a^k)
    ExactMatrix proj(n, n);
    const std::vector<int> piv = pivot_columns(ak);
    if (!piv.empty()) {
        ExactMatrix f(n, static_cast<int>(piv.size()));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < f.cols; ++j) {
                f(i, j) = ak(i, piv[static_cast<std::size_t>(j)]);
            }
        }
        const auto gram_inv = inverse(adjoint(f) * f);
        proj = f * (*gram_inv) * adjoint(f);
    }
    const ExactMatrix comp = ExactMatrix::identity(n) - proj;

    // Unknowns: real and imaginary parts of x, column-major. Each equation
    // block is real-linear in x, so its columns are images of basis elements.
    const int unknowns = 2 * n * n;
    auto basis = [&](int u) {
        ExactMatrix e(n, n);
        const int entry = u / 2;
        e(entry % n, entry / n) = (u % 2 == 0) ? GaussRational(1) : GaussRational(0, 1);
        return e;
    };
    const std::vector<std::function<ExactMatrix(const ExactMatrix&)>> maps{
        [&](const ExactMatrix& x) { return x * ak1; },
        [&](const ExactMatrix& x) { return a * x - adjoint(a * x); },
        [&](const ExactMatrix& x) { return comp * x; },
    };
    const std::vector<ExactMatrix> rhs{ak, ExactMatrix(n, n), ExactMatrix(n, n)};

    std::vector<std::vector<Rational>> system;
    for (std::size_t b = 0; b < maps.size(); ++b) {
        std::vector<ExactMatrix> images;
        for (int u = 0; u < unknowns; ++u) {
            images.push_back(maps[b](basis(u)));
        }
        for (int entry = 0; entry < n * n; ++entry) {
            const int i = entry % n;
            const int j = entry / n;
            for (int part = 0; part < 2; ++part) {
                std::vector<Rational> row;
                for (int u = 0; u < unknowns; ++u) {
                    const GaussRational& v = images[static_cast<std::size_t>(u)](i, j);
                    row.push_back(part == 0 ? v.re : v.im);
                }
                row.push_back(part == 0 ? rhs[b](i, j).re : rhs[b](i, j).im);
                system.push_back(std::move(row));
            }
        }
    }
    const std::function<bool(const Rational&)> zero = [](const Rational& v) { return v == 0; };
    const std::vector<int> pivots = echelon(system, unknowns + 1, zero);
    if (static_cast<int>(pivots.size()) != unknowns || pivots.back() == unknowns) {
        return std::nullopt;
    }
    ExactMatrix x(n, n);
    for (int u = 0; u < unknowns; ++u) {
        const auto& row = system[static_cast<std::size_t>(u)];
        const Rational v = row[static_cast<std::size_t>(unknowns)] / row[static_cast<std::size_t>(u)];
        const int entry = u / 2;
        GaussRational& slot = x(entry % n, entry / n);
        if (u % 2 == 0) {
            slot.re = v;
        } else {
            slot.im = v;
        }
    }
    return x;
}

} // namespace oracle
