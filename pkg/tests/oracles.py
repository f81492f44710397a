"""Independent reference computations used to freeze expected values."""

from fractions import Fraction
from itertools import product

from rcbij.crystal_tableaux import Path, tableau_op


def weyl_dim_d(n, lam):
    """Weyl dimension formula for so(2n), lam in epsilon coordinates."""
    rho = [n - k for k in range(1, n + 1)]
    num = den = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = lam[i] + rho[i], lam[j] + rho[j]
            num *= (a - b) * (a + b)
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
    return num / den


def weyl_dim_a(lam):
    """Weyl dimension formula for gl(m), lam a weakly decreasing list."""
    m = len(lam)
    num = den = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    return num / den


def partition_eps(lam, n):
    lam = list(lam) + [0] * (n - len(lam))
    return lam[:n]


def _string(op, x, i):
    m = 0
    while True:
        x = op(x, i)
        if x is None:
            return m
        m += 1


def tensor_op(spec, factors, i, d):
    """The two-factor rule applied recursively: b_L (x) rest."""
    def op(fs, i, d=d):
        return tensor_op(spec, fs, i, d)

    def single(t, i, dd):
        return tableau_op(spec, t, i, dd)

    if len(factors) == 1:
        t = single(factors[0], i, d)
        return None if t is None else (t,)
    head, rest = factors[0], factors[1:]
    eps_head = _string(lambda t, k: single(t, k, "e"), head, i)
    phi_rest = _string(lambda fs, k: tensor_op(spec, fs, k, "f"), rest, i)
    if d == "e":
        on_head = eps_head > phi_rest
    else:
        on_head = eps_head >= phi_rest
    if on_head:
        t = single(head, i, d)
        return None if t is None else (t,) + rest
    r = tensor_op(spec, rest, i, d)
    return None if r is None else (head,) + r


def b11_table(n, letter):
    """Rigged partitions of the single-letter configurations, node by node."""
    out = []
    for a in range(1, n + 1):
        if letter > 0:
            i = letter
            out.append([(1, 0)] if a < i - 1 else [(1, -1)] if a == i - 1 else [])
        elif letter == -n:
            out.append([(1, 0)] if a <= n - 2 else [] if a == n - 1 else [(1, -1)])
        else:
            i = -letter
            if a <= i - 2:
                out.append([(1, 0)])
            elif a == i - 1:
                out.append([(1, 1)])
            elif i == n - 1:
                # a = n-1 and a = n each carry one string of rigging -1
                out.append([(1, -1)])
            elif a == i:
                out.append([(1, -1), (1, -1)])
            elif a <= n - 2:
                out.append([(1, 0), (1, 0)])
            else:
                out.append([(1, 0)])
    return out
