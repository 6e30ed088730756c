#include "tropicount/residue.hpp"

#include <algorithm>
#include <cmath>

namespace tropicount {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime_u32(p)) throw math_error("modulus " + std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint64_t base = a % p_, acc = 1 % p_;
    while (e > 0) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t PrimeField::pow_signed(std::uint32_t a, long long e) const {
    if (e >= 0) return pow(a, static_cast<std::uint64_t>(e));
    if (a == 0) throw math_error("0 raised to a negative power");
    // a^(p-1) = 1, so reduce the exponent modulo p-1.
    long long m = p_ - 1;
    long long r = e % m;
    if (r < 0) r += m;
    return pow(a, static_cast<std::uint64_t>(r));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw math_error("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2u);
}

std::uint32_t eval_at(const PrimeField& k, const ResiduePoly& f,
                      const std::vector<std::uint32_t>& x) {
    std::uint32_t acc = 0;
    for (const auto& t : f.terms) {
        std::uint32_t v = t.coeff;
        for (std::size_t j = 0; j < t.exps.size(); ++j)
            if (t.exps[j] != 0) v = k.mul(v, k.pow_signed(x[j], t.exps[j]));
        acc = k.add(acc, v);
    }
    return acc;
}

ResiduePoly partial(const PrimeField& k, const ResiduePoly& f, int j) {
    ResiduePoly d;
    d.nvars = f.nvars;
    for (const auto& t : f.terms) {
        if (t.exps[j] == 0) continue;
        std::uint32_t c = k.mul(t.coeff, k.reduce(t.exps[j]));
        if (c == 0) continue;
        ResidueTerm dt;
        dt.coeff = c;
        dt.exps = t.exps;
        dt.exps[j] -= 1;
        d.terms.push_back(std::move(dt));
    }
    return d;
}

std::uint32_t jacobian_at(const PrimeField& k, const std::vector<ResiduePoly>& system,
                          const std::vector<std::uint32_t>& x) {
    const int n = static_cast<int>(system.size());
    std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = eval_at(k, partial(k, system[i], j), x);

    // Gaussian elimination mod p.
    std::uint32_t det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = k.neg(det);
        }
        det = k.mul(det, m[c][c]);
        std::uint32_t ipiv = k.inv(m[c][c]);
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            std::uint32_t f = k.mul(m[r][c], ipiv);
            for (int cc = c; cc < n; ++cc) m[r][cc] = k.sub(m[r][cc], k.mul(f, m[c][cc]));
        }
    }
    return det;
}

namespace {

void check_budget(const PrimeField& k, int nvars, long long budget) {
    long double pts = 1;
    for (int i = 0; i < nvars; ++i) pts *= k.p();
    if (pts > static_cast<long double>(budget))
        throw budget_error("residue search over " + std::to_string(k.p()) + "^" +
                           std::to_string(nvars) + " points exceeds budget " +
                           std::to_string(budget));
}

template <typename Visit>
void for_each_unit_point(const PrimeField& k, int nvars, Visit&& visit) {
    std::vector<std::uint32_t> x(nvars, 1);
    if (k.p() == 2 && nvars > 0) {
        visit(x);
        return;
    }
    while (true) {
        visit(x);
        int j = nvars - 1;
        while (j >= 0 && x[j] == k.p() - 1) {
            x[j] = 1;
            --j;
        }
        if (j < 0) break;
        ++x[j];
    }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_zeros(
    const PrimeField& k, const std::vector<ResiduePoly>& system, int nvars,
    long long budget) {
    check_budget(k, nvars, budget);
    std::vector<std::vector<std::uint32_t>> zeros;
    for_each_unit_point(k, nvars, [&](const std::vector<std::uint32_t>& x) {
        for (const auto& f : system)
            if (eval_at(k, f, x) != 0) return;
        zeros.push_back(x);
    });
    return zeros;  // odometer order is lexicographic already
}

std::optional<std::vector<std::uint32_t>> find_degenerate_zero(
    const PrimeField& k, const std::vector<ResiduePoly>& system, int nvars,
    long long budget) {
    for (const auto& z : enumerate_zeros(k, system, nvars, budget))
        if (jacobian_at(k, system, z) == 0) return z;
    return std::nullopt;
}

std::vector<std::uint32_t> solve_power_equation(const PrimeField& k, std::uint32_t c,
                                                std::uint64_t d, long long budget) {
    if (c == 0) throw math_error("power equation with zero right-hand side");
    if (d == 0) throw math_error("power equation needs a positive exponent");
    if (static_cast<long long>(k.p()) > budget)
        throw budget_error("power equation search over F_" + std::to_string(k.p()) +
                           " exceeds budget");
    std::vector<std::uint32_t> roots;
    for (std::uint32_t x = 1; x < k.p(); ++x)
        if (k.pow(x, d) == c) roots.push_back(x);
    return roots;
}

}  // namespace tropicount
