#!/usr/bin/env python3
"""Brute-force oracle for frozen test values.

Independent of the C++ code path: characters are evaluated by modular
exponentiation (no index table), and Jacobi sums are reduced with sympy.
Run it to regenerate the constants frozen in the unit tests.
"""
from math import comb, gcd, isqrt

import sympy


def multiplicative_order(a, p):
    k, x = 1, a % p
    while x != 1:
        x = x * a % p
        k += 1
    return k


def smallest_generator(p):
    return next(g for g in range(2, p) if multiplicative_order(g, p) == p - 1)


def primitive_roots(p, count):
    return [g for g in range(2, p) if multiplicative_order(g, p) == p - 1][:count]


def char_exponent(p, g, e, a):
    # the k in [0, e) with a^((p-1)/e) == (g^((p-1)/e))^k
    target = pow(a, (p - 1) // e, p)
    base = pow(g, (p - 1) // e, p)
    x = 1
    for k in range(e):
        if x == target:
            return k
        x = x * base % p
    raise ValueError


def cyclotomic_table(p, g, e):
    table = [[0] * e for _ in range(e)]
    for v in range(1, p - 1):
        table[char_exponent(p, g, e, v)][char_exponent(p, g, e, v + 1)] += 1
    return table


def jacobi_raw(p, g, e, i, j):
    coeffs = [0] * e
    for v in range(1, p - 1):
        k = (i * char_exponent(p, g, e, v) + j * char_exponent(p, g, e, v + 1)) % e
        coeffs[k] += 1
    return coeffs


def canonical(coeffs, e):
    z = sympy.symbols('z')
    poly = sympy.Poly(sum(c * z**k for k, c in enumerate(coeffs)), z)
    rem = poly.rem(sympy.Poly(sympy.cyclotomic_poly(e, z), z))
    out = [0] * e
    for (k,), c in rem.terms():
        out[k] = int(c)
    return out


def residue8(coeffs):
    r = [0] * 8
    for k, a in enumerate(coeffs):
        for m in range(min(k, 7) + 1):
            r[m] = (r[m] + a * comb(k, m)) % 7
    return r


def dickson_hurwitz(table, e):
    return [[sum(table[h][(i - j * h) % e] for h in range(e)) for j in range(e)] for i in range(e)]


def lw_solution(b7):
    c = [b7[i][1] - b7[0][1] for i in range(7)]
    x1 = -sum(c[1:])
    x2, x3, x4 = c[1] - c[6], c[2] - c[5], c[3] - c[4]
    s16, s25, s34 = c[1] + c[6], c[2] + c[5], c[3] + c[4]
    assert (s16 - s25) % 7 == 0 and (s16 + s25 - 2 * s34) % 7 == 0
    return [x1, x2, x3, x4, (s16 + s25 - 2 * s34) // 7, (s16 - s25) // 7]


def tu(p):
    for u in range(1, isqrt(p) + 1):
        t = isqrt(p - 7 * u * u) if p - 7 * u * u >= 0 else None
        if t is not None and t * t == p - 7 * u * u:
            return (t, u) if t % 7 == 1 else (-t, u)


def main():
    print('generator(7, 29, 197) =', [smallest_generator(p) for p in (7, 29, 197)])
    print('primitive roots 197, 491 =', primitive_roots(197, 2), primitive_roots(491, 2))
    print('tu 29 113 197 =', tu(29), tu(113), tu(197))
    for p in (29,):
        g = smallest_generator(p)
        t7 = cyclotomic_table(p, g, 7)
        print('p=29 cyc7 =', t7)
        print('p=29 J(1,1)_7 canonical =', canonical(jacobi_raw(p, g, 7, 1, 1), 7))
        print('p=29 lw =', lw_solution(dickson_hurwitz(t7, 7)))
    p = 197
    g = smallest_generator(p)
    t49 = cyclotomic_table(p, g, 49)
    t7 = cyclotomic_table(p, g, 7)
    b7 = dickson_hurwitz(t7, 7)
    b49 = dickson_hurwitz(t49, 49)
    print('p=197 (0,0)_49 =', t49[0][0], ' (1,1)_49 =', t49[1][1], ' (3,5)_49 =', t49[3][5])
    print('p=197 lw =', lw_solution(b7))
    print('p=197 B(.,1)_7 =', [b7[i][1] for i in range(7)])
    print('p=197 c_{i,1} i=3..6 =', [sum(comb(u, i) * b7[u][1] for u in range(i, 7)) for i in range(3, 7)])
    s1 = sum(t * b49[7 * t + j][1] for t in range(7) for j in range(7))
    print('p=197 S(1) =', s1)
    print('p=197 residue J(1,1)_49 =', residue8(jacobi_raw(p, g, 49, 1, 1)))
    print('p=197 residue J(1,7)_49 =', residue8(jacobi_raw(p, g, 49, 1, 7)))
    print('p=197 ind(7) =', next(k for k in range(p - 1) if pow(g, k, p) == 7))


if __name__ == '__main__':
    main()
