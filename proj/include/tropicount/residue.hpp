#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropicount/errors.hpp"

namespace tropicount {

// Arithmetic context for the prime field F_p. Elements are plain integers in
// [0, p); the modulus lives here, not in each element.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : static_cast<std::uint32_t>(a + p_ - b);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    // Negative exponents require a != 0; the exponent is reduced mod p-1.
    std::uint32_t pow_signed(std::uint32_t a, long long e) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws math_error on 0
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

    // Reduce an arbitrary signed integer into [0, p).
    std::uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }

private:
    std::uint32_t p_;
};

// A Laurent polynomial over F_p: nonzero coefficients, pairwise distinct
// integer exponent vectors. An empty term list denotes the zero polynomial
// (it only arises from formal derivatives, never from parsing).
struct ResidueTerm {
    std::uint32_t coeff = 0;
    std::vector<long long> exps;
};

struct ResiduePoly {
    int nvars = 0;
    std::vector<ResidueTerm> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_monomial() const { return terms.size() == 1; }
};

// Evaluation at a point with all coordinates in F_p^*; negative exponents go
// through modular inverses.
std::uint32_t eval_at(const PrimeField& k, const ResiduePoly& f,
                      const std::vector<std::uint32_t>& x);

// Formal partial derivative with respect to variable j (0-based). A term
// c*x^e contributes (e_j mod p)*c*x^(e - u_j); terms with e_j = 0 (or
// e_j = 0 mod p) drop out.
ResiduePoly partial(const PrimeField& k, const ResiduePoly& f, int j);

// Determinant of the Jacobian matrix (d f_i / d x_j) evaluated at x.
std::uint32_t jacobian_at(const PrimeField& k, const std::vector<ResiduePoly>& system,
                          const std::vector<std::uint32_t>& x);

inline constexpr long long kDefaultResidueBudget = 10'000'000;

// All common zeros of the system in (F_p^*)^nvars, lexicographically sorted.
// Throws budget_error when p^nvars exceeds the budget.
std::vector<std::vector<std::uint32_t>> enumerate_zeros(
    const PrimeField& k, const std::vector<ResiduePoly>& system, int nvars,
    long long budget = kDefaultResidueBudget);

// First (lexicographic) common zero at which the Jacobian also vanishes.
std::optional<std::vector<std::uint32_t>> find_degenerate_zero(
    const PrimeField& k, const std::vector<ResiduePoly>& system, int nvars,
    long long budget = kDefaultResidueBudget);

// All x in F_p^* with x^d = c, for c != 0 and d >= 1, sorted ascending.
// The result has 0 or gcd(p-1, d) elements.
std::vector<std::uint32_t> solve_power_equation(const PrimeField& k, std::uint32_t c,
                                                std::uint64_t d,
                                                long long budget = kDefaultResidueBudget);

}  // namespace tropicount
