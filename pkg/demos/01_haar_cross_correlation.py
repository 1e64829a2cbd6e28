#!/usr/bin/env python3
"""Walk through the deterministic Haar wavelet layer.

The local autocovariance machinery rests on a family of exact objects:
discrete Haar wavelets, their cross-scale autocorrelations Psi_{j,l},
the piecewise-linear core function that generates the closed forms, the
Gram matrix A used to unbias periodograms, and the absolute-product sums
B_l(j,i).  Everything here is checked two ways: a closed-form evaluation
against literal brute-force summation.
"""

import numpy as np

from locpacf import (
    a_matrix,
    b_product,
    haar_coefficients,
    omega_core,
    psi_auto,
    psi_cross_bruteforce,
    psi_cross_closed,
)
from locpacf.verify import cos_ratio_integral

print("discrete Haar wavelet, scale 3 (length 8):")
print(" ", np.array2string(haar_coefficients(3), precision=4))
print("  sums to", haar_coefficients(3).sum(), "energy", (haar_coefficients(3) ** 2).sum())

print("\ncross-scale autocorrelation Psi_{3,1}(tau), closed form vs brute force:")
print(f"  {'tau':>4} {'closed':>10} {'brute':>10}")
for tau in range(-3, 9):
    c = psi_cross_closed(3, 1, tau)
    b = psi_cross_bruteforce(3, 1, tau)
    print(f"  {tau:>4} {c:>10.6f} {b:>10.6f}")

worst = max(
    abs(psi_cross_closed(j, l, t) - psi_cross_bruteforce(j, l, t))
    for j in range(1, 7)
    for l in range(1, 7)
    if j != l
    for t in range(-(2**l) - 2, 2**j + 3)
)
print(f"  worst disagreement over scales <= 6: {worst:.2e}")

print("\nthe core function generates every closed form: Psi_{j,l}(tau) =")
print("Omega_{j-l}(-tau/2^l) for l < j.  Spot checks:")
for (j, l, tau) in ((4, 2, 3), (5, 1, -1), (3, 2, 6)):
    print(
        f"  Psi_{{{j},{l}}}({tau}) = {psi_cross_closed(j, l, tau):+.6f}"
        f"   Omega_{j - l}({-tau / 2**l:+.3f}) = {omega_core(j - l, -tau / 2**l):+.6f}"
    )

print("\nautocorrelation wavelet Psi_2(tau) is piecewise linear in tau/4:")
print(" ", [round(psi_auto(2, t), 3) for t in range(-4, 5)])

print("\nGram matrix A (scales up to 4); diagonal follows (2^{2l}+5)/(3*2^l):")
print(np.array2string(a_matrix(4), precision=4))

print("\nabsolute-product sums B_l(j,i): closed forms vs brute force")
for (l, j, i) in ((1, 2, 2), (2, 3, 4), (3, 1, 2), (2, 4, 1)):
    cl = b_product(l, j, i)
    br = b_product(l, j, i, "bruteforce")
    print(f"  B_{l}({j},{i}) closed={cl.value:.6f} [{cl.kind}]  brute={br.value:.6f}")

print("\ntrigonometric ratio integral equals 4*pi*min(a,b):")
for (a, b) in ((0.5, 2.0), (3.5, 1.5), (8.0, 8.0)):
    got = cos_ratio_integral(a, b)
    print(f"  a={a}, b={b}: quadrature {got:.8f}  vs  {4 * np.pi * min(a, b):.8f}")
