#include "gfib/exact.hpp"

#include <stdexcept>

namespace gfib {

FibSequence fib_sequence(Order d, long long n_max) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    std::vector<mpz_class> v(static_cast<std::size_t>(n_max) + 1);
    v[0] = 0;
    if (n_max >= 1) v[1] = 1;
    // window = v[n-d] + ... + v[n-1], maintained incrementally
    mpz_class window = (n_max >= 1) ? 1 : 0;
    const long long dd = d.value();
    for (long long n = 2; n <= n_max; ++n) {
        v[static_cast<std::size_t>(n)] = window;
        window += v[static_cast<std::size_t>(n)];
        if (n - dd >= 1) window -= v[static_cast<std::size_t>(n - dd)];
    }
    return FibSequence{d, std::move(v)};
}

namespace {

// Dense d x d big-integer matrix, row major.
struct Mat {
    int n;
    std::vector<mpz_class> a;

    explicit Mat(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_) {}

    mpz_class& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const mpz_class& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    // Companion matrix of F_n = F_{n-1} + ... + F_{n-d}.
    static Mat companion(int n) {
        Mat m(n);
        for (int j = 0; j < n; ++j) m.at(0, j) = 1;
        for (int i = 1; i < n; ++i) m.at(i, i - 1) = 1;
        return m;
    }
};

Mat mul(const Mat& x, const Mat& y) {
    Mat r(x.n);
    mpz_class acc;
    for (int i = 0; i < x.n; ++i) {
        for (int j = 0; j < x.n; ++j) {
            acc = 0;
            for (int k = 0; k < x.n; ++k)
                mpz_addmul(acc.get_mpz_t(), x.at(i, k).get_mpz_t(), y.at(k, j).get_mpz_t());
            r.at(i, j) = acc;
        }
    }
    return r;
}

}  // namespace

mpz_class fib_at(Order d, long long n) {
    if (n <= 0) return 0;
    if (n == 1) return 1;
    // F_n = (M^{n-1})[0][0]
    Mat base = Mat::companion(d.value());
    Mat result = Mat::identity(d.value());
    unsigned long long e = static_cast<unsigned long long>(n - 1);
    while (e != 0) {
        if (e & 1ULL) result = mul(result, base);
        e >>= 1;
        if (e != 0) base = mul(base, base);
    }
    return result.at(0, 0);
}

}  // namespace gfib
