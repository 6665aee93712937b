"""Macaulay representations with respect to q.

Every integer n >= 0 has exactly one expansion

    n = rho_q(d, m_d) + rho_q(d-1, m_{d-1}) + ... + rho_q(1, m_1)

with -1 <= m_1 <= ... <= m_d and, for finite q, entries q-1 apart
strictly increasing unless both are -1.  A greedy scan finds it, and
comparing the coefficient tuples lexicographically is the same as
comparing the represented integers.  Letting q grow without bound
recovers the classical d-binomial expansion.
"""

from rmweights import INFINITY, compare, decompose, recompose

rep = decompose(12, 3, 4)
print("12 in degree 3 with respect to q = 4:")
print("  coefficients (m_3, m_2, m_1) =", rep.coeffs)
print("  term values                  =", rep.term_values())
print("  recompose                    =", recompose(rep))
print()

rep = decompose(16, 3, 2)
print("16 in degree 3 with respect to q = 2:")
print("  coefficients =", rep.coeffs, " (the -1 slot contributes zero)")
print("  term values  =", rep.term_values())
print()

rep = decompose(16, 3, INFINITY)
print("16 in degree 3, classical mode:")
print("  coefficients   =", rep.coeffs)
print("  binomial tops  =", rep.binomial_tops, " so 16 = C(5,3) + C(4,2) + C(0,1)")
print()

# lexicographic order on coefficient tuples mirrors numeric order
a, b = decompose(11, 3, 2), decompose(17, 3, 2)
print("order preservation for q = 2, d = 3:")
print("  11 ->", a.coeffs)
print("  17 ->", b.coeffs)
print("  compare(rep(11), rep(17)) =", compare(a, b))
print()

print("the first few integers in degree 2 with respect to q = 3:")
for n in range(10):
    r = decompose(n, 2, 3)
    terms = " + ".join(str(t) for t in r.term_values())
    print(f"  {n:2d} = {terms:7s}   coeffs {r.coeffs}")
