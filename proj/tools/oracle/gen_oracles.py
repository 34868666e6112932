# Copyright 2026 The dyadic authors
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
"""Independent reference values for the C++ tests.

Shares no code with the library. Matrices and csc-power sums come from exact
arithmetic in Q[z]/(z^N + 1), z = exp(i pi/N), N = 2^n; zeta values, Merca
sums and power averages from mpmath; polynomials and Bernoulli numbers from
sympy. Output: tests/data/oracles.json.

    python3 tools/oracle/gen_oracles.py
"""

import json
import math
import pathlib
from fractions import Fraction

import mpmath
import sympy

mpmath.mp.dps = 60


class Cyclo:
    """Elements of Q[z]/(z^N + 1) as coefficient lists."""

    def __init__(self, N):
        self.N = N

    def mono(self, e, c=Fraction(1)):
        N = self.N
        e %= 2 * N
        v = [Fraction(0)] * N
        if e >= N:
            v[e - N] = -c
        else:
            v[e] = c
        return v

    def add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def scale(self, a, c):
        return [x * c for x in a]

    def mul(self, a, b):
        N = self.N
        out = [Fraction(0)] * N
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                k = i + j
                if k >= N:
                    out[k - N] -= x * y
                else:
                    out[k] += x * y
        return out

    def one(self):
        return self.mono(0)

    def cos(self, m):  # cos(m pi / N)
        return self.scale(self.add(self.mono(m), self.mono(-m)), Fraction(1, 2))

    def sin(self, m):  # (z^m - z^-m) / 2i, 1/i = -z^(N/2)
        d = self.add(self.mono(m), self.scale(self.mono(-m), -1))
        return self.scale(self.mul(d, self.mono(self.N // 2)), Fraction(-1, 2))

    def inverse(self, a):
        # solve a * x = 1 via the multiplication matrix
        N = self.N
        cols = [self.mul(a, self.mono(j)) for j in range(N)]
        return solve(cols, self.one())

    def power(self, a, r):
        if r < 0:
            a, r = self.inverse(a), -r
        out = self.one()
        for _ in range(r):
            out = self.mul(out, a)
        return out


def solve(cols, v):
    """Exact c with sum_k c_k cols[k] = v; raises if v is not in the span."""
    rows = len(v)
    k = len(cols)
    m = [[cols[j][i] for j in range(k)] + [v[i]] for i in range(rows)]
    piv = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    for i in range(r, rows):
        if m[i][k] != 0:
            raise ValueError("not in span")
    out = [Fraction(0)] * k
    for i, c in enumerate(piv):
        out[c] = m[i][k]
    return out


def frac_str(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def power_matrix(r, n, basis):
    N = 2 ** n
    h = N // 4
    F = Cyclo(N)
    if basis == "OddCos":
        B = [F.cos(2 * k - 1) for k in range(1, h + 1)]
        row = lambda i: F.cos(2 * i - 1)
    elif basis == "OddSin":
        B = [F.sin(2 * k - 1) for k in range(1, h + 1)]
        row = lambda i: F.sin(2 * i - 1)
    else:  # EvenCos: 1, cos(j pi / 2^(n-1))
        B = [F.one()] + [F.cos(2 * j) for j in range(1, h)]
        row = lambda i: F.cos(2 * i - 1)
    return [[frac_str(c) for c in solve(B, F.power(row(i), r))] for i in range(1, h + 1)]


def csc_sum(s, n):
    N = 2 ** n
    h = N // 4
    F = Cyclo(N)
    csc = [F.inverse(F.sin(2 * j - 1)) for j in range(1, h + 1)]
    total = [Fraction(0)] * N
    for c in csc:
        total = F.add(total, F.power(c, s))
    if s % 2 == 0:
        return {"scalar": True, "value": frac_str(solve([F.one()], total)[0])}
    return {"scalar": False, "weights": [frac_str(w) for w in solve(csc, total)]}


def mp(x, digits=50):
    return mpmath.nstr(x, digits, min_fixed=-5, max_fixed=5)


def zeta_sine_sum(s, n):
    N = 2 ** n
    acc = mpmath.mpf(0)
    for i in range(1, N // 4 + 1):
        acc += (N * mpmath.sin((2 * i - 1) * mpmath.pi / N)) ** (-s)
    return 2 ** s * mpmath.pi ** s / (2 ** s - 1) * acc


def zeta_weighted(which, n):
    N = 2 ** n
    acc = mpmath.mpf(0)
    for j in range(1, N // 4 + 1):
        if which == 3:
            w = -j * j + (2 ** (n - 1) + 1) * j - 2 ** (n - 2)
        else:
            w = (j ** 4 - 2 * (2 ** (n - 1) + 1) * j ** 3 + (3 * 2 ** (n - 1) - 1) * j ** 2
                 + 2 * (2 ** (n - 2) + 2 ** (3 * n - 4) + 1) * j - 2 ** (n - 1) * (2 ** (2 * n - 3) + 1))
        acc += w / mpmath.sin((2 * j - 1) * mpmath.pi / N)
    if which == 3:
        return mpmath.pi ** 3 / (7 * mpmath.mpf(2) ** (3 * n - 4)) * acc
    return mpmath.pi ** 5 / (93 * mpmath.mpf(2) ** (5 * n - 6)) * acc


def cayley(n):
    N = 2 ** n
    h = N // 4
    ref = [mpmath.cos((2 * m - 1) * mpmath.pi / N) for m in range(1, h + 1)]
    table = []
    for a in range(1, h + 1):
        row = []
        for b in range(1, h + 1):
            v = abs(mpmath.cos((2 * a - 1) * (2 * b - 1) * mpmath.pi / N))
            m = min(range(h), key=lambda k: abs(ref[k] - v))
            assert abs(ref[m] - v) < mpmath.mpf(10) ** -40
            row.append(m + 1)
        table.append(row)
    return table


def main():
    x = sympy.Symbol("x")
    out = {}

    # f_n = T_{2^(n-1)} for n >= 3; sympy's minimal polynomial confirms irreducibility
    minpoly = {}
    for n in range(3, 9):
        T = sympy.Poly(sympy.chebyshevt(2 ** (n - 1), x), x)
        minpoly[str(n)] = [str(c) for c in reversed(T.all_coeffs())]
    for n in range(3, 6):
        mp_poly = sympy.Poly(sympy.minimal_polynomial(sympy.cos(sympy.pi / 2 ** n), x), x)
        T = sympy.Poly(sympy.chebyshevt(2 ** (n - 1), x), x)
        assert sympy.Poly(T.monic(), x) == sympy.Poly(mp_poly.monic(), x), n
    out["minpoly"] = minpoly

    # cos((2i-1)t) = (-1)^i p_i(cos t)
    cheb = {}
    for i in range(1, 11):
        T = sympy.Poly(sympy.chebyshevt(2 * i - 1, x), x)
        cheb[str(i)] = [str((-1) ** i * c) for c in reversed(T.all_coeffs())]
    out["p_poly"] = cheb

    mats = []
    for n in (3, 4, 5, 6):
        for r in (1, 3, 5, 7, 15, 21):
            for basis in ("OddCos", "OddSin"):
                mats.append({"r": r, "n": n, "basis": basis, "values": power_matrix(r, n, basis)})
        for r in (2, 4, 8, 16, 20):
            mats.append({"r": r, "n": n, "basis": "EvenCos", "values": power_matrix(r, n, "EvenCos")})
        for r in (-1, -3, -5):
            for basis in ("OddCos", "OddSin"):
                mats.append({"r": r, "n": n, "basis": basis, "values": power_matrix(r, n, basis)})
    out["matrices"] = mats

    sums = []
    for n in (3, 4, 5, 6):
        for s in range(2, 9):
            d = csc_sum(s, n)
            d.update({"s": s, "n": n})
            sums.append(d)
    out["csc_sums"] = sums

    merca = []
    for N, p in [(2, 1), (3, 1), (3, 4), (3, 10), (4, 3), (5, 2), (5, 7), (5, 13), (6, 1), (6, 5),
                 (7, 3), (7, 10), (8, 9), (9, 4), (10, 12), (11, 6), (12, 13), (13, 20), (16, 17), (20, 25)]:
        lhs = sum(mpmath.cos(k * mpmath.pi / N) ** (2 * p) for k in range(1, (N - 1) // 2 + 1))
        merca.append({"N": N, "p": p, "lhs": mp(mpmath.mpf(lhs))})
    out["merca"] = merca

    mpmath.mp.dps = 120
    avg = []
    for n in range(2, 7):
        for p in (1, 2, 5, 10, 17, 20, 33, 40):
            N = 2 ** n
            v = sum((2 * mpmath.cos((2 * i - 1) * mpmath.pi / N)) ** (2 * p) for i in range(1, N // 4 + 1)) / (N // 4)
            k = int(mpmath.nint(v))
            assert abs(v - k) < mpmath.mpf(10) ** -50
            avg.append({"p": p, "n": n, "value": str(k)})
    out["power_average"] = avg
    mpmath.mp.dps = 60

    zeta = {"zeta3": mp(mpmath.zeta(3), 40), "zeta5": mp(mpmath.zeta(5), 40), "sine_sum": [], "weighted": []}
    for s in (2, 3, 4, 5):
        for n in range(3, 13):
            zeta["sine_sum"].append({"s": s, "n": n, "value": mp(zeta_sine_sum(s, n))})
    for which in (3, 5):
        for n in range(3, 13):
            zeta["weighted"].append({"which": which, "n": n, "value": mp(zeta_weighted(which, n))})
    zeta["even_over_pi"] = {str(j): frac_str(Fraction(str(sympy.zeta(2 * j) / sympy.pi ** (2 * j))))
                            for j in range(1, 11)}
    zeta["bernoulli"] = {str(m): frac_str(Fraction(str(sympy.bernoulli(m)))) for m in range(0, 31)}
    # sympy >= 1.12 uses B_1 = +1/2; the recurrence sum_k C(m+1,k) B_k = 0 gives -1/2
    zeta["bernoulli"]["1"] = "-1/2"
    out["zeta"] = zeta

    out["cayley"] = {str(n): cayley(n) for n in range(3, 8)}

    path = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data" / "oracles.json"
    path.write_text(json.dumps(out, indent=1) + "\n")
    print("wrote", path)


if __name__ == "__main__":
    main()
