#include "hirota/identities.hpp"

#include <stdexcept>
#include <vector>

namespace hirota {

namespace {

// 1-based view over k_1 .. k_{2n+1}.
class OddTuple {
public:
    explicit OddTuple(std::span<const GaussianRational> ks) : ks_(ks) {
        if (ks.size() < 3 || ks.size() % 2 == 0)
            throw std::invalid_argument("identity: need an odd number (>= 3) of terms");
    }

    int n() const { return static_cast<int>(ks_.size() - 1) / 2; }
    const GaussianRational& operator()(int i) const { return ks_[static_cast<std::size_t>(i - 1)]; }

    GaussianRational run(int first, int last) const {
        GaussianRational s;
        for (int i = first; i <= last; ++i) s += (*this)(i);
        return s;
    }
    GaussianRational total() const { return run(1, static_cast<int>(ks_.size())); }

    // a_l = k_{2l+1} + k_{2l+2},  b_{l,m} = k_{2l+2m+2} + k_{2l+2m+3}
    GaussianRational link_a(int l) const { return (*this)(2 * l + 1) + (*this)(2 * l + 2); }
    GaussianRational link_b(int l, int m) const {
        return (*this)(2 * l + 2 * m + 2) + (*this)(2 * l + 2 * m + 3);
    }

private:
    std::span<const GaussianRational> ks_;
};

}  // namespace

IdentitySides identity_cubic(std::span<const GaussianRational> ks) {
    const OddTuple k(ks);
    const int n = k.n();
    const int last = 2 * n + 1;

    GaussianRational cubes;
    for (const auto& z : ks) cubes += cube(z);

    GaussianRational sum;
    for (int l = 0; l <= n - 1; ++l) {
        for (int m = 0; m <= n - l - 1; ++m) {
            const GaussianRational ab = k.link_a(l) * k.link_b(l, m);
            const GaussianRational prefix = k.run(1, 2 * l + 1);
            const GaussianRational suffix = k.run(2 * l + 2 * m + 3, last);
            sum += prefix * ab + ab * suffix;
        }
    }
    return {cube(k.total()) - cubes, GaussianRational(3) * sum};
}

IdentitySides identity_quadratic(std::span<const GaussianRational> ks) {
    const OddTuple k(ks);
    const int n = k.n();

    GaussianRational alternating;
    for (int i = 1; i <= 2 * n + 1; ++i) {
        if (i % 2 == 1)
            alternating += square(k(i));
        else
            alternating -= square(k(i));
    }

    GaussianRational sum;
    for (int l = 0; l <= n - 1; ++l)
        for (int m = 0; m <= n - l - 1; ++m) sum += k.link_a(l) * k.link_b(l, m);
    return {square(k.total()) - alternating, GaussianRational(2) * sum};
}

IdentityReport run_identity_suite(int n_max, int trials, std::uint64_t seed) {
    if (n_max < 1) throw std::invalid_argument("run_identity_suite: n_max must be >= 1");
    if (trials < 0) throw std::invalid_argument("run_identity_suite: trials must be >= 0");

    IdentityReport report;
    report.n_max = n_max;
    report.trials_per_case = trials;
    report.seed = seed;

    const std::vector<GaussianRational> gate{1, 2, 3};
    const auto gate_cubic = identity_cubic(gate);
    const auto gate_quad = identity_quadratic(gate);
    report.trials += 2;
    if (!(gate_cubic.holds() && gate_cubic.lhs == GaussianRational(180))) ++report.failures;
    if (!(gate_quad.holds() && gate_quad.lhs == GaussianRational(30))) ++report.failures;

    std::mt19937_64 rng(seed);
    for (int n = 1; n <= n_max; ++n) {
        for (int trial = 0; trial < trials; ++trial) {
            std::vector<GaussianRational> ks;
            ks.reserve(static_cast<std::size_t>(2 * n + 1));
            for (int i = 0; i < 2 * n + 1; ++i) ks.push_back(random_gaussian_rational(rng));
            report.trials += 2;
            if (!identity_cubic(ks).holds()) ++report.failures;
            if (!identity_quadratic(ks).holds()) ++report.failures;
        }
    }
    return report;
}

}  // namespace hirota
