#include "cyclewalk/exact_det.hpp"

#include <mutex>

namespace cyclewalk {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::mutex g_prime_mutex;

// Primes just below 2^62, generated lazily and cached.
const std::vector<u64>& crt_primes(std::size_t count) {
    static std::vector<u64> primes;
    static u64 candidate = (u64(1) << 62) - 1;
    std::lock_guard<std::mutex> lock(g_prime_mutex);
    while (primes.size() < count) {
        mpz_class c(static_cast<unsigned long>(candidate));
        while (mpz_probab_prime_p(c.get_mpz_t(), 40) == 0) {
            c -= 2;
        }
        primes.push_back(c.get_ui());
        candidate = c.get_ui() - 2;
    }
    return primes;
}

u64 det_mod_p(std::vector<std::vector<u64>> m, u64 p) {
    const std::size_t n = m.size();
    u64 det = 1;
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            negate = !negate;
        }
        const u64 pv = m[col][col];
        det = mulmod(det, pv, p);
        const u64 inv = powmod(pv, p - 2, p);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            const u64 factor = mulmod(m[row][col], inv, p);
            for (std::size_t j = col; j < n; ++j) {
                const u64 sub = mulmod(factor, m[col][j], p);
                m[row][j] = m[row][j] >= sub ? m[row][j] - sub : m[row][j] + p - sub;
            }
        }
    }
    if (negate) det = det ? p - det : 0;
    return det;
}

}  // namespace

Int integer_determinant(const DenseMatrix<Int>& a) {
    const std::size_t n = a.rows();
    if (n == 0 || a.cols() != n) throw std::domain_error("determinant needs a square matrix");

    // Hadamard: |det|^2 <= prod_i (sum_j a_ij^2)
    Int bound_sq(1);
    for (std::size_t i = 0; i < n; ++i) {
        Int row(0);
        for (std::size_t j = 0; j < n; ++j) row += a(i, j) * a(i, j);
        if (row == 0) return Int(0);
        bound_sq *= row;
    }
    const std::size_t bound_bits = mpz_sizeinbase(bound_sq.get_mpz_t(), 2) / 2 + 2;
    const std::size_t prime_count = bound_bits / 61 + 2;
    const auto& primes = crt_primes(prime_count);

    Int value(0), modulus(1);
    for (std::size_t pi = 0; pi < prime_count; ++pi) {
        const u64 p = primes[pi];
        std::vector<std::vector<u64>> residues(n, std::vector<u64>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                residues[i][j] = mpz_fdiv_ui(a(i, j).get_mpz_t(), p);
            }
        }
        const u64 d = det_mod_p(std::move(residues), p);
        // incremental CRT: value <- value + modulus * t, t = (d - value)/modulus mod p
        Int pz(static_cast<unsigned long>(p));
        Int delta = Int(static_cast<unsigned long>(d)) - value;
        Int minv;
        if (mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t()) == 0) {
            throw InternalError("CRT moduli not coprime");
        }
        Int t = (delta * minv) % pz;
        if (t < 0) t += pz;
        value += modulus * t;
        modulus *= pz;
    }
    if (value * 2 > modulus) value -= modulus;
    return value;
}

Polynomial lagrange_interpolate(const std::vector<Int>& xs, const std::vector<Rational>& ys) {
    if (xs.size() != ys.size() || xs.empty()) {
        throw std::domain_error("interpolation needs matching nonempty node and value lists");
    }
    const std::size_t n = xs.size();
    // full = prod (x - x_i); per node divide out the linear factor and
    // rescale by the value over the node product.
    Polynomial full = Polynomial::one();
    for (const Int& x : xs) full *= Polynomial{Rational(-x), Rational(1)};

    Polynomial result = Polynomial::zero();
    for (std::size_t t = 0; t < n; ++t) {
        if (ys[t] == 0) continue;
        Int denom(1);
        for (std::size_t s = 0; s < n; ++s) {
            if (s != t) denom *= xs[t] - xs[s];
        }
        Polynomial basis = full.divide_exact(Polynomial{Rational(-xs[t]), Rational(1)});
        result += basis.scaled(ys[t] / Rational(denom));
    }
    return result;
}

Polynomial determinant_pencil(const DenseMatrix<Rational>& base, const DenseMatrix<Rational>& slope) {
    const std::size_t n = base.rows();
    if (n == 0 || base.cols() != n || slope.rows() != n || slope.cols() != n) {
        throw std::domain_error("pencil determinant needs matching square matrices");
    }
    Int common_den(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), base(i, j).get_den_mpz_t());
            mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), slope(i, j).get_den_mpz_t());
        }
    }
    DenseMatrix<Int> ibase(n, n, Int(0)), islope(n, n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ibase(i, j) = Int(base(i, j) * common_den);
            islope(i, j) = Int(slope(i, j) * common_den);
        }
    }

    // n+1 small integer nodes centered at zero
    std::vector<Int> xs;
    std::vector<Rational> ys;
    xs.reserve(n + 1);
    ys.reserve(n + 1);
    const long offset = static_cast<long>(n) / 2;
    Rational den_power = Rational(1) / Rational(common_den);
    Rational scale(1);
    for (std::size_t i = 0; i < n; ++i) scale *= den_power;
    for (long t = 0; t <= static_cast<long>(n); ++t) {
        const long x = t - offset;
        DenseMatrix<Int> at_point(n, n, Int(0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                at_point(i, j) = ibase(i, j) + x * islope(i, j);
            }
        }
        xs.emplace_back(x);
        ys.push_back(Rational(integer_determinant(at_point)) * scale);
    }
    return lagrange_interpolate(xs, ys);
}

Polynomial charpoly_direct(const DenseMatrix<Rational>& m) {
    const std::size_t n = m.rows();
    DenseMatrix<Rational> neg(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) neg(i, j) = -m(i, j);
    }
    DenseMatrix<Rational> id(n, n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
    return determinant_pencil(neg, id);
}

Rational determinant_fraction_elimination(const DenseMatrix<Rational>& a) {
    const std::size_t n = a.rows();
    if (n == 0 || a.cols() != n) throw std::domain_error("determinant needs a square matrix");
    DenseMatrix<Rational> m = a;
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const Rational inv = Rational(1) / m(col, col);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m(row, col) == 0) continue;
            const Rational factor = m(row, col) * inv;
            for (std::size_t j = col; j < n; ++j) {
                m(row, j) -= factor * m(col, j);
            }
        }
    }
    return det;
}

}  // namespace cyclewalk
