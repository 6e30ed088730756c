#pragma once

#include <gmpxx.h>

#include <vector>

#include "tropicount/residue.hpp"

namespace tropicount {

// Square integer matrices, arbitrary precision. Entry growth during the
// Smith reduction is real even for n = 5, so fixed-width integers are out.
using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix identity_matrix(int n);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
mpz_class determinant(const IntMatrix& m);  // fraction-free (Bareiss)

// M = P * D * Q with P, Q unimodular and D = diag(d_1, ..., d_n),
// d_i >= 0, d_1 | d_2 | ... | d_n.
struct SNFDecomposition {
    IntMatrix P;
    IntMatrix D;
    IntMatrix Q;

    std::vector<mpz_class> diagonal() const {
        std::vector<mpz_class> d;
        for (std::size_t i = 0; i < D.size(); ++i) d.push_back(D[i][i]);
        return d;
    }
};

SNFDecomposition smith_normal_form(const IntMatrix& m);

// Exact integer inverse of a matrix with |det| = 1. Throws math_error
// otherwise.
IntMatrix unimodular_inverse(const IntMatrix& u);

// x^M = (x_1^{m_11} ... x_n^{m_1n}, ..., x_1^{m_n1} ... x_n^{m_nn}) over
// F_p^*; exponents are reduced mod p-1, so arbitrary integer entries are
// fine. Satisfies x^{PQ} = (x^Q)^P.
std::vector<std::uint32_t> monomial_power(const PrimeField& k,
                                          const std::vector<std::uint32_t>& x,
                                          const IntMatrix& m);

}  // namespace tropicount
