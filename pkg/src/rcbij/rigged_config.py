"""Rigged configurations: vacancy numbers, crystal operators and enumeration."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product

from .crystal_tableaux import DEFAULT_CAP, closure
from .root_data import DynkinSpec, cartan_matrix, fundamental_weight, simple_root, vadd, vscale, zero


def _canon_rows(rows):
    rows = [(int(l), int(x)) for l, x in rows]
    for l, _ in rows:
        if l < 1:
            raise ValueError(f"row length must be positive, got {l}")
    return tuple(sorted(rows, key=lambda lx: (-lx[0], -lx[1])))


def check_shape(spec, shape):
    shape = tuple((int(r), int(s)) for r, s in shape)
    for r, s in shape:
        spec.check_node(r)
        if s < 1:
            raise ValueError(f"factor width must be positive, got {s}")
    return shape


@dataclass(frozen=True)
class RiggedConfiguration:
    """nu[a-1] holds the strings (length, rigging) of node a, longest first."""

    spec: DynkinSpec
    shape: tuple
    nu: tuple

    def __post_init__(self):
        object.__setattr__(self, "shape", check_shape(self.spec, self.shape))
        if len(self.nu) != self.spec.rank:
            raise ValueError(f"need {self.spec.rank} rigged partitions, got {len(self.nu)}")
        object.__setattr__(self, "nu", tuple(_canon_rows(rows) for rows in self.nu))

    def rows(self, a):
        return self.nu[a - 1]

    def with_nu(self, nu, shape=None):
        return RiggedConfiguration(self.spec, self.shape if shape is None else shape, tuple(nu))


def empty_rc(spec, shape):
    return RiggedConfiguration(spec, tuple(shape), ((),) * spec.rank)


def q_value(part, l):
    return sum(min(l, x) for x in part)


class Vacancy:
    """Vacancy numbers P^{(a)}_l for fixed (shape, configuration)."""

    def __init__(self, spec, shape, nu):
        self.spec = spec
        self.mu = {a: [s for r, s in shape if r == a] for a in spec.nodes}
        self.lengths = {a: [l for l, _ in nu[a - 1]] for a in spec.nodes}
        self.cache = {}

    def __call__(self, a, l):
        key = (a, l)
        if key not in self.cache:
            if l == 0:
                val = 0
            else:
                val = q_value(self.mu[a], l) - 2 * q_value(self.lengths[a], l)
                for b in self.spec.neighbors(a):
                    val += q_value(self.lengths[b], l)
            self.cache[key] = val
        return self.cache[key]

    def infinity(self, a):
        top = max([0] + [x for v in self.mu.values() for x in v]
                  + [x for v in self.lengths.values() for x in v])
        return self(a, top + 1)


def vacancies(rc):
    return Vacancy(rc.spec, rc.shape, rc.nu)


def vacancy(rc, a, l):
    rc.spec.check_node(a)
    return vacancies(rc)(a, l)


def p_infinity(rc, a):
    return vacancies(rc).infinity(a)


def coriggings(rc):
    vac = vacancies(rc)
    return [[vac(a, l) - x for l, x in rc.rows(a)] for a in rc.spec.nodes]


def is_admissible(rc):
    vac = vacancies(rc)
    return all(x <= vac(a, l) for a in rc.spec.nodes for l, x in rc.rows(a))


def is_highest(rc):
    vac = vacancies(rc)
    return all(0 <= x <= vac(a, l) for a in rc.spec.nodes for l, x in rc.rows(a))


def rc_weight(rc):
    spec = rc.spec
    w = zero(spec)
    for r, s in rc.shape:
        w = vadd(w, vscale(s, fundamental_weight(spec, r)))
    for a in spec.nodes:
        size = sum(l for l, _ in rc.rows(a))
        if size:
            w = vadd(w, vscale(-size, simple_root(spec, a)))
    return w


def _smallest(rows):
    return min(x for _, x in rows) if rows else None


def rc_eps(rc, i):
    rc.spec.check_node(i)
    x = _smallest(rc.rows(i))
    return -min(0, x) if x is not None else 0


def rc_phi(rc, i):
    return p_infinity(rc, i) + rc_eps(rc, i)


def rc_op(rc, i, direction):
    """Kashiwara operator e_i / f_i; returns None when the result vanishes.

    The acting string changes length and rigging; every other string (at every
    node) keeps its corigging.
    """
    d = direction.lower()
    if d not in ("e", "f"):
        raise ValueError(f"operator direction must be 'e' or 'f', got {direction!r}")
    spec = rc.spec
    spec.check_node(i)
    rows = list(rc.rows(i))
    x = _smallest(rows)
    if d == "e":
        if x is None or x >= 0:
            return None
        ell = min(l for l, y in rows if y == x)
        new_len, new_rig = ell - 1, x + 1
    else:
        if x is None or x > 0:
            ell, new_len, new_rig = 0, 1, -1
        else:
            ell = max(l for l, y in rows if y == x)
            new_len, new_rig = ell + 1, x - 1

    cor = coriggings(rc)
    lengths = [[l for l, _ in rc.rows(a)] for a in spec.nodes]
    if ell:
        j = rows.index((ell, x))
        del lengths[i - 1][j]
        del cor[i - 1][j]
    new_lengths = [list(ls) for ls in lengths]
    if new_len:
        new_lengths[i - 1].append(new_len)
    vac = Vacancy(spec, rc.shape, [[(l, 0) for l in ls] for ls in new_lengths])
    nu = []
    for a in spec.nodes:
        part = [(l, vac(a, l) - c) for l, c in zip(lengths[a - 1], cor[a - 1])]
        if a == i and new_len:
            if d == "f" and new_rig > vac(i, new_len):
                return None
            part.append((new_len, new_rig))
        nu.append(part)
    return rc.with_nu(nu)


# convexity

def _multiplicity(rc, a, l):
    return sum(1 for k, _ in rc.rows(a) if k == l)


def convexity_violations(rc):
    """Every failed inequality among the convexity relations of the vacancy numbers."""
    spec = rc.spec
    vac = vacancies(rc)
    top = max([1] + [s for _, s in rc.shape] + [l for a in spec.nodes for l, _ in rc.rows(a)]) + 1
    bad = []
    for a in spec.nodes:
        for l in range(1, top + 1):
            p0, p1, p2 = vac(a, l - 1), vac(a, l), vac(a, l + 1)
            m = _multiplicity(rc, a, l)
            second = -p0 + 2 * p1 - p2
            if m == 0 and second < 0:
                bad.append(("convex", a, l, second, 0))
            if second < -2 * m:
                bad.append(("convex-shifted", a, l, second, -2 * m))
            bound = -2 * m + sum(_multiplicity(rc, b, l) for b in spec.neighbors(a))
            if second < bound:
                bad.append(("second-difference", a, l, second, bound))
    return bad


# enumeration

def _inverse_bound(spec, totals):
    """Componentwise floor of A^{-1} totals, an upper bound on |nu^(a)| for dominant weights."""
    a = [[Fraction(v) for v in row] for row in cartan_matrix(spec)]
    n = len(a)
    aug = [row + [Fraction(t)] for row, t in zip(a, totals)]
    for c in range(n):
        piv = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [v / pv for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[c])]
    return [int(row[-1] // 1) for row in aug]


def _partitions(total, largest=None):
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def highest_weight_sizes(spec, shape):
    """All (|nu^(1)|, ..., |nu^(n)|) giving a dominant weight."""
    totals = [sum(s for r, s in shape if r == a) for a in spec.nodes]
    bound = _inverse_bound(spec, totals)
    cm = cartan_matrix(spec)
    out = []
    for sizes in product(*(range(b + 1) for b in bound)):
        if all(totals[b] - sum(cm[b][a] * sizes[a] for a in range(spec.rank)) >= 0
               for b in range(spec.rank)):
            out.append(sizes)
    return out


def enumerate_highest(spec, shape, weight=None, cap=DEFAULT_CAP):
    """All highest rigged configurations (0 <= rigging <= vacancy) of the shape.

    weight, if given, restricts to configurations of that weight.
    """
    shape = check_shape(spec, shape)
    found = []
    for sizes in highest_weight_sizes(spec, shape):
        if weight is not None:
            probe = RiggedConfiguration(spec, shape, tuple(((k, 0),) if k else () for k in sizes))
            if rc_weight(probe) != tuple(weight):
                continue
        for parts in product(*(_partitions(k) for k in sizes)):
            nu0 = [[(l, 0) for l in part] for part in parts]
            vac = Vacancy(spec, shape, nu0)
            if any(vac(a, l) < 0 for a in spec.nodes for l in parts[a - 1]):
                continue
            if any(vac.infinity(a) < 0 for a in spec.nodes):
                continue
            choices = []
            for a in spec.nodes:
                per_len = []
                for l in sorted(set(parts[a - 1]), reverse=True):
                    m = parts[a - 1].count(l)
                    per_len.append([(l, c) for c in combinations_with_replacement(range(vac(a, l) + 1), m)])
                choices.append(list(product(*per_len)))
            for pick in product(*choices):
                nu = tuple(tuple((l, x) for l, xs in node for x in xs) for node in pick)
                found.append(RiggedConfiguration(spec, shape, nu))
                if len(found) > cap:
                    raise RuntimeError(f"enumeration exceeded the cap of {cap} elements")
    return found


def enumerate_all(spec, shape, cap=DEFAULT_CAP):
    """The f-closure of the highest rigged configurations, in breadth-first order."""
    seeds = enumerate_highest(spec, shape, cap=cap)
    return closure(spec, seeds, lambda rc, i: rc_op(rc, i, "f"), cap)
