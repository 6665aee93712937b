"""Generalized Hamming weights from coefficient tuples.

The r-th weight d_r of RM(d, m) over F_q is q^m minus the largest
number of common zeros an r-dimensional subcode can share.  That count
comes straight from the Macaulay machinery: expand rho_q(d, m) - r in
degree d with respect to q and sum q^(m_i) over the nonnegative
coefficients.  No search, just integer arithmetic.
"""

from rmweights import CodeParams, decompose, e_bar, first_weight, ghw, hierarchy, mu_tuple

p = CodeParams(4, 3, 3)
print("RM(3, 3) over F_4: length", p.length, "dimension", p.dimension)
rep = decompose(p.dimension - 8, p.d, p.q)
print("  rank r = 8 expands k - r = 12 as coeffs", rep.coeffs)
print("  max common zeros e_bar =", e_bar(p, 8))
print("  weight d_8 = 64 - 18   =", ghw(p, 8))
print()

p = CodeParams(2, 3, 5)
print("RM(3, 5) over F_2: length", p.length, "dimension", p.dimension)
print("  d_10 =", ghw(p, 10), " via e_bar =", e_bar(p, 10))
print()

# the whole hierarchy at once; strictly increasing, ending at q^m
for q, d, m in ((2, 1, 3), (2, 2, 3), (3, 2, 2)):
    h = hierarchy(CodeParams(q, d, m))
    print(f"hierarchy of RM({d}, {m}) over F_{q}:", tuple(h))
print()

# each rank corresponds to a digit tuple (mu_1, ..., mu_m); its base-q
# valuation sum mu_i q^(m-i) equals e_bar at that rank
p = CodeParams(2, 3, 5)
print("digit tuples for RM(3, 5) over F_2:")
for r in (1, 2, 10, 26):
    mu = mu_tuple(p, r)
    print(f"  r = {r:2d}: mu = {mu}, e_bar = {e_bar(p, r)}")
print()

# the minimum distance has a closed form: (q - b) q^(m - a - 1) where
# d = a(q-1) + b with 1 <= b <= q-1
print("first weights against the closed form:")
for q, d, m in ((2, 3, 5), (3, 4, 3), (4, 3, 3), (5, 7, 2)):
    p = CodeParams(q, d, m)
    print(f"  RM({d}, {m}) over F_{q}: d_1 = {ghw(p, 1)} = {first_weight(p)}")
