#include "affstr/exact.hpp"

#include <algorithm>
#include <utility>

namespace affstr {

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

bool is_integer(const Rational& v) { return v.get_den() == 1; }

Integer to_integer(const Rational& v)
{
    if (!is_integer(v)) {
        throw ConsistencyError("expected an integer, got " + v.get_str());
    }
    return v.get_num();
}

long to_long(const Integer& v)
{
    if (!v.fits_slong_p()) {
        throw ResourceError("integer " + v.get_str() + " exceeds machine range");
    }
    return v.get_si();
}

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = Rational(m(i, j));
        }
    }
    return out;
}

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw ConfigError("matrix dimension mismatch in multiply");
    }
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

RatMatrix transpose(const RatMatrix& a)
{
    RatMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = a(i, j);
        }
    }
    return out;
}

namespace {

// Reduces [m | aug] to reduced row echelon form in place; returns false if
// m is singular.
bool gauss_jordan(RatMatrix& m, RatMatrix& aug)
{
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return false;
        }
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(c, j));
            }
            for (std::size_t j = 0; j < aug.cols(); ++j) {
                std::swap(aug(pivot, j), aug(c, j));
            }
        }
        const Rational inv = 1 / m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) *= inv;
        }
        for (std::size_t j = 0; j < aug.cols(); ++j) {
            aug(c, j) *= inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m(i, c) == 0) {
                continue;
            }
            const Rational f = m(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) -= f * m(c, j);
            }
            for (std::size_t j = 0; j < aug.cols(); ++j) {
                aug(i, j) -= f * aug(c, j);
            }
        }
    }
    return true;
}

} // namespace

RatMatrix inverse(const RatMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw ConfigError("inverse of a non-square matrix");
    }
    RatMatrix work = m;
    RatMatrix aug = RatMatrix::identity(m.rows());
    if (!gauss_jordan(work, aug)) {
        throw ConsistencyError("matrix is singular");
    }
    return aug;
}

Rational determinant(RatMatrix m)
{
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m(pivot, c) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return 0;
        }
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(pivot, j), m(c, j));
            }
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) {
                continue;
            }
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) {
                m(i, j) -= f * m(c, j);
            }
        }
    }
    return det;
}

std::vector<Rational> solve(const RatMatrix& m, std::span<const Rational> rhs)
{
    if (m.rows() != m.cols() || rhs.size() != m.rows()) {
        throw ConfigError("dimension mismatch in solve");
    }
    RatMatrix work = m;
    RatMatrix aug(rhs.size(), 1);
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        aug(i, 0) = rhs[i];
    }
    if (!gauss_jordan(work, aug)) {
        throw ConsistencyError("singular system");
    }
    std::vector<Rational> x(rhs.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = aug(i, 0);
    }
    return x;
}

std::vector<Rational> mat_vec(const RatMatrix& m, std::span<const Rational> v)
{
    if (m.cols() != v.size()) {
        throw ConfigError("dimension mismatch in apply");
    }
    std::vector<Rational> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i] += m(i, j) * v[j];
        }
    }
    return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m(a, j), m(b, j));
    }
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::swap(m(i, a), m(i, b));
    }
}

// row[dst] -= f * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f)
{
    for (std::size_t j = 0; j < m.cols(); ++j) {
        m(dst, j) -= f * m(src, j);
    }
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f)
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        m(i, dst) -= f * m(i, src);
    }
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& a)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);

    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to (t, t).
            std::size_t pi = rows;
            std::size_t pj = cols;
            for (std::size_t i = t; i < rows; ++i) {
                for (std::size_t j = t; j < cols; ++j) {
                    if (d(i, j) != 0 && (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi == rows) {
                break;
            }
            swap_rows(d, t, pi);
            swap_rows(u, t, pi);
            swap_cols(d, t, pj);
            swap_cols(v, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
                add_row(d, i, t, q);
                add_row(u, i, t, q);
                if (d(i, t) != 0) {
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
                add_col(d, j, t, q);
                add_col(v, j, t, q);
                if (d(t, j) != 0) {
                    clean = false;
                }
            }
            if (!clean) {
                continue;
            }
            // Divisibility: fold any entry not divisible by the pivot into row t.
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (d(i, j) % d(t, t) != 0) {
                        add_row(d, t, i, Integer(-1));
                        add_row(u, t, i, Integer(-1));
                        divisible = false;
                        break;
                    }
                }
            }
            if (divisible) {
                break;
            }
        }
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < cols; ++j) {
                d(t, j) = -d(t, j);
            }
            for (std::size_t j = 0; j < rows; ++j) {
                u(t, j) = -u(t, j);
            }
        }
    }

    SmithForm out{std::move(u), std::move(v), {}};
    out.diagonal.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        out.diagonal.push_back(d(t, t));
    }
    return out;
}

} // namespace affstr
