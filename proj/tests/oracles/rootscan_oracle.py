#!/usr/bin/env python3
# Copyright 2026 The realcyclo Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent sympy oracle for the root scanner.

Computes Phi_p(alpha) and Psi_{4p}(alpha) exactly with sympy's own cyclotomic
and minimal-polynomial machinery and reports the primes q <= q_max dividing
them. Used to freeze expected values in the C++ tests.
"""
import sys
from sympy import cyclotomic_poly, minimal_polynomial, cos, pi, Symbol, primerange, factorint, Poly

x = Symbol("x")
ALPHAS = [-2, 2, -3, 3, -4, 4, -8, 8]


def psi4p(p):
    # Psi_{4p}(x) = V_p(x) / x would be circular with the C++ cross-check;
    # build it from Phi_{4p} palindromy instead.
    phi = Poly(cyclotomic_poly(4 * p, x), x)
    b = phi.all_coeffs()[::-1]
    m = (len(b) - 1) // 2
    # V-basis coefficients
    c = [b[m]] + [b[m + k] for k in range(1, m + 1)]
    # expand V_k in power basis
    V = [Poly(1, x), Poly(x, x), Poly(x**2 - 2, x)]
    while len(V) <= m:
        V.append(Poly(x, x) * V[-1] - V[-2])
    out = Poly(0, x)
    for k, ck in enumerate(c):
        out += ck * V[k]
    return out


def hits(pmax, qmax):
    primes_q = list(primerange(3, qmax + 1))
    rows = []
    for p in primerange(3, pmax + 1):
        phi = Poly(cyclotomic_poly(p, x), x)
        psi = psi4p(p)
        for fam, f in (("cyclotomic", phi), ("maxreal", psi)):
            for a in ALPHAS:
                v = int(f.eval(a))
                for q in primes_q:
                    am = a % q
                    if am in (0, 1, q - 1):
                        continue
                    if v % q == 0:
                        rows.append((fam, p, q, a))
    return rows


if __name__ == "__main__":
    pmax = int(sys.argv[1]); qmax = int(sys.argv[2])
    rows = hits(pmax, qmax)
    from collections import Counter
    cnt = Counter((r[0], r[3]) for r in rows)
    for fam in ("cyclotomic", "maxreal"):
        print(fam, [cnt[(fam, a)] for a in ALPHAS])
    first = min((r[1] for r in rows if r[0] == "maxreal"), default=None)
    print("first maxreal p:", first)
    print("total", len(rows))
