"""Writes H<|D|>.txt: the Hilbert class polynomial of D, constant term first.

Usage: python3 gen_classpoly.py -71 -151 ...   (needs mpmath)
"""
import math
import sys

from mpmath import mp, mpc, mpf, nint, kleinj, sqrt

mp.dps = 600


def reduced_forms(D):
    forms = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if math.gcd(math.gcd(a, abs(b)), c) != 1:
                continue
            forms.append((a, b, c))
        a += 1
    return forms


def hilbert(D):
    poly = [mpc(1)]
    for a, b, _ in reduced_forms(D):
        j = 1728 * kleinj((-b + sqrt(mpf(D))) / (2 * a))
        nxt = [mpc(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= c * j
        poly = nxt
    for c in poly:
        assert abs(c.imag) < mpf(10) ** -100
        assert abs(c.real - nint(c.real)) < mpf(10) ** -100
    return [int(nint(c.real)) for c in poly]


if __name__ == "__main__":
    for D in map(int, sys.argv[1:]):
        co = hilbert(D)
        with open(f"H{-D}.txt", "w") as f:
            f.write(f"D={D} h={len(co) - 1}\n")
            f.writelines(f"{c}\n" for c in co)
