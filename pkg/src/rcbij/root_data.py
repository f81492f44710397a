"""Cartan data for the classical types A_n and D_n in epsilon coordinates."""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class DynkinSpec:
    """A classical Dynkin diagram: family "A" (n >= 1) or "D" (n >= 3)."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "D"):
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise ValueError("rank must be an integer")
        low = 3 if self.family == "D" else 1
        if self.rank < low:
            raise ValueError(f"type {self.family} needs rank >= {low}, got {self.rank}")

    @property
    def is_d(self):
        return self.family == "D"

    @property
    def dim(self):
        # A_n lives in n+1 coordinates, D_n in n
        return self.rank + 1 if self.family == "A" else self.rank

    @property
    def nodes(self):
        return range(1, self.rank + 1)

    def spin_nodes(self):
        if not self.is_d:
            return ()
        return (self.rank - 1, self.rank)

    def check_node(self, a):
        if not 1 <= a <= self.rank:
            raise ValueError(f"node {a} out of range 1..{self.rank}")

    def neighbors(self, a):
        self.check_node(a)
        n = self.rank
        if self.is_d and a >= n - 2:
            if a == n - 2:
                nb = [n - 3, n - 1, n]
            else:
                nb = [n - 2]
        else:
            nb = [a - 1, a + 1]
        return tuple(b for b in nb if 1 <= b <= n)

    def __str__(self):
        return f"{self.family}{self.rank}"


def cartan_entry(spec, a, b):
    spec.check_node(a)
    spec.check_node(b)
    if a == b:
        return 2
    return -1 if b in spec.neighbors(a) else 0


def cartan_matrix(spec):
    return [[cartan_entry(spec, a, b) for b in spec.nodes] for a in spec.nodes]


def unit(spec, i, value=1):
    """Return value * epsilon_i as a tuple of Fractions."""
    v = [Fraction(0)] * spec.dim
    v[i - 1] = Fraction(value)
    return tuple(v)


def zero(spec):
    return (Fraction(0),) * spec.dim


def vadd(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vsub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vscale(c, v):
    return tuple(c * x for x in v)


def simple_root(spec, i):
    spec.check_node(i)
    n = spec.rank
    v = [Fraction(0)] * spec.dim
    if spec.is_d and i == n:
        v[n - 2] = v[n - 1] = Fraction(1)
    else:
        v[i - 1] = Fraction(1)
        v[i] = Fraction(-1)
    return tuple(v)


def fundamental_weight(spec, i):
    spec.check_node(i)
    n = spec.rank
    if spec.is_d and i >= n - 1:
        half = Fraction(1, 2)
        v = [half] * n
        if i == n - 1:
            v[n - 1] = -half
        return tuple(v)
    return tuple(Fraction(1) if k < i else Fraction(0) for k in range(spec.dim))


def coroot_pairing(spec, i, weight):
    """<h_i, weight> for a weight in epsilon coordinates."""
    spec.check_node(i)
    if len(weight) != spec.dim:
        raise ValueError(f"weight has {len(weight)} coordinates, expected {spec.dim}")
    n = spec.rank
    if spec.is_d and i == n:
        val = Fraction(weight[n - 2]) + Fraction(weight[n - 1])
    else:
        val = Fraction(weight[i - 1]) - Fraction(weight[i])
    if val.denominator != 1:
        raise ValueError(f"non-integral pairing {val} at node {i}")
    return int(val)
