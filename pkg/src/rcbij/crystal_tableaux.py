"""Kirillov-Reshetikhin tableaux, spin columns and tensor products of them.

Letters are nonzero ints: k is the letter k, -k is the barred letter.  A spin
column of type D is a tuple of n signs (+1/-1).  Tensor products are written
leftmost first and follow the anti-Kashiwara convention: in b2 (x) b1 the
lowering operator acts on b2 when eps(b2) >= phi(b1).
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import NamedTuple

from .root_data import DynkinSpec, unit, vadd, zero

DEFAULT_CAP = 10**6


def _check_dir(direction):
    d = direction.lower()
    if d not in ("e", "f"):
        raise ValueError(f"operator direction must be 'e' or 'f', got {direction!r}")
    return d


# single letters

@lru_cache(maxsize=None)
def _letter_arrows(spec):
    """Map node -> {letter: f_i(letter)} for the crystal B^{1,1}."""
    n = spec.rank
    arrows = {}
    for i in spec.nodes:
        if not spec.is_d:
            arrows[i] = {i: i + 1}
        elif i < n:
            arrows[i] = {i: i + 1, -(i + 1): -i}
        else:
            arrows[i] = {n - 1: -n, n: -(n - 1)}
    return arrows


@lru_cache(maxsize=None)
def _letter_tables(spec):
    f = _letter_arrows(spec)
    e = {i: {v: k for k, v in arrows.items()} for i, arrows in f.items()}
    return {"f": f, "e": e}


def letters(spec):
    """All letters of B^{1,1} in crystal order (1, 2, ..., then barred)."""
    n = spec.rank
    if not spec.is_d:
        return list(range(1, n + 2))
    return list(range(1, n + 1)) + list(range(-n, 0))


def check_letter(spec, x):
    if spec.is_d:
        ok = isinstance(x, int) and 1 <= abs(x) <= spec.rank
    else:
        ok = isinstance(x, int) and 1 <= x <= spec.rank + 1
    if not ok:
        raise ValueError(f"{x!r} is not a letter of {spec}")


def b11_op(spec, x, i, direction):
    spec.check_node(i)
    return _letter_tables(spec)[_check_dir(direction)][i].get(x)


def letter_weight(spec, x):
    return unit(spec, abs(x), 1 if x > 0 else -1)


# spin columns

def spin_op(x, i, direction):
    d = _check_dir(direction)
    n = len(x)
    if not 1 <= i <= n:
        raise ValueError(f"node {i} out of range for a spin column of length {n}")
    if i < n:
        a, b = i - 1, i
        src, dst = ((1, -1), (-1, 1)) if d == "f" else ((-1, 1), (1, -1))
    else:
        a, b = n - 2, n - 1
        src, dst = ((1, 1), (-1, -1)) if d == "f" else ((-1, -1), (1, 1))
    if (x[a], x[b]) != src:
        return None
    y = list(x)
    y[a], y[b] = dst
    return tuple(y)


def spin_weight(x):
    return tuple(Fraction(s, 2) for s in x)


def spin_letters(x):
    """Render a sign vector as a column of n letters, smallest on top."""
    n = len(x)
    col = [i for i in range(1, n) if x[i - 1] > 0]
    col.append(n if x[n - 1] > 0 else -n)
    col += [-i for i in range(n - 1, 0, -1) if x[i - 1] < 0]
    return tuple(col)


def signs_from_letters(col, n):
    signs = [0] * n
    for k in col:
        if not 1 <= abs(k) <= n or signs[abs(k) - 1]:
            raise ValueError(f"column {list(col)} is not a spin column of length {n}")
        signs[abs(k) - 1] = 1 if k > 0 else -1
    if 0 in signs:
        raise ValueError(f"column {list(col)} is not a spin column of length {n}")
    return tuple(signs)


def spin_seed(n, r):
    """Highest sign vector for B^{n,1} (all plus) or B^{n-1,1} (last sign minus)."""
    return (1,) * (n - 1) + ((1,) if r == n else (-1,))


# tableaux and paths

@dataclass(frozen=True)
class KRTableau:
    """An r x s rectangle stored by columns (top to bottom).

    For a spin element of type D (r = n-1 or n), cols holds s sign vectors
    instead of letter columns.
    """

    r: int
    s: int
    cols: tuple
    spin: bool = False

    def __post_init__(self):
        if self.r < 1 or self.s < 1 or len(self.cols) != self.s:
            raise ValueError(f"need {self.s} columns for a {self.r} x {self.s} tableau")
        if not self.spin and any(len(c) != self.r for c in self.cols):
            raise ValueError(f"every column must have height {self.r}")

    def letter_columns(self):
        if self.spin:
            return tuple(spin_letters(c) for c in self.cols)
        return self.cols

    def rows(self):
        cols = self.letter_columns()
        return [[c[j] for c in cols] for j in range(len(cols[0]))]

    def cells(self):
        """Cell addresses in tensor order, paired with their atoms."""
        if self.spin:
            return [((c,), col) for c, col in enumerate(self.cols)]
        out = []
        for c, col in enumerate(self.cols):
            for j in range(self.r - 1, -1, -1):
                out.append(((c, j), col[j]))
        return out

    def replace(self, addr, value):
        cols = list(self.cols)
        if self.spin:
            cols[addr[0]] = value
        else:
            c, j = addr
            col = list(cols[c])
            col[j] = value
            cols[c] = tuple(col)
        return KRTableau(self.r, self.s, tuple(cols), self.spin)


def column(*entries):
    return KRTableau(len(entries), 1, (tuple(entries),))


def from_rows(rows):
    r, s = len(rows), len(rows[0])
    return KRTableau(r, s, tuple(tuple(rows[j][c] for j in range(r)) for c in range(s)))


def spin_tableau(spec, r, cols):
    return KRTableau(r, len(cols), tuple(tuple(c) for c in cols), True)


def is_spin_shape(spec, r):
    return spec.is_d and r >= spec.rank - 1


@dataclass(frozen=True)
class Path:
    spec: DynkinSpec
    factors: tuple

    @property
    def shape(self):
        return tuple((t.r, t.s) for t in self.factors)

    def __len__(self):
        return len(self.factors)


def path(spec, *factors):
    return Path(spec, tuple(factors))


def reading_word(t):
    """Columns right to left, each read top to bottom."""
    out = []
    for col in reversed(t.letter_columns()):
        out.extend(col)
    return out


def _atom_op(spec, atom, i, d):
    if isinstance(atom, tuple):
        return spin_op(atom, i, d)
    return _letter_tables(spec)[d][i].get(atom)


def _atom_string(spec, atom, i, d):
    m = 0
    while True:
        atom = _atom_op(spec, atom, i, d)
        if atom is None:
            return m
        m += 1


def _atoms(p):
    out = []
    for k, t in enumerate(p.factors):
        for addr, atom in t.cells():
            out.append((k, addr, atom))
    return out


class Signature(NamedTuple):
    phi: int
    eps: int
    e_pos: object
    f_pos: object


def _reduce_signs(spec, atoms, i):
    plus, minus = [], []
    for idx, (_, _, atom) in enumerate(atoms):
        for sign in "+" * _atom_string(spec, atom, i, "f") + "-" * _atom_string(spec, atom, i, "e"):
            if sign == "-":
                minus.append(idx)
            elif minus:
                minus.pop()
            else:
                plus.append(idx)
    return plus, minus


def path_signature(p, i):
    """phi_i, eps_i and the factor indices where e_i / f_i act (None if they vanish)."""
    p.spec.check_node(i)
    atoms = _atoms(p)
    plus, minus = _reduce_signs(p.spec, atoms, i)
    f_pos = atoms[plus[-1]][0] if plus else None
    e_pos = atoms[minus[0]][0] if minus else None
    return Signature(len(plus), len(minus), e_pos, f_pos)


def path_op(p, i, direction):
    d = _check_dir(direction)
    p.spec.check_node(i)
    atoms = _atoms(p)
    plus, minus = _reduce_signs(p.spec, atoms, i)
    if d == "f":
        if not plus:
            return None
        k, addr, atom = atoms[plus[-1]]
    else:
        if not minus:
            return None
        k, addr, atom = atoms[minus[0]]
    new = _atom_op(p.spec, atom, i, d)
    factors = list(p.factors)
    factors[k] = factors[k].replace(addr, new)
    return Path(p.spec, tuple(factors))


def tableau_op(spec, t, i, direction):
    q = path_op(Path(spec, (t,)), i, direction)
    return None if q is None else q.factors[0]


def tableau_weight(spec, t):
    w = zero(spec)
    if t.spin:
        for c in t.cols:
            w = vadd(w, spin_weight(c))
        return w
    for col in t.cols:
        for x in col:
            w = vadd(w, letter_weight(spec, x))
    return w


def path_weight(p):
    w = zero(p.spec)
    for t in p.factors:
        w = vadd(w, tableau_weight(p.spec, t))
    return w


def is_path_highest(p):
    return all(path_op(p, i, "e") is None for i in p.spec.nodes)


# classical decomposition and the filling map

def _domino_shapes(r, s):
    """Partitions reachable from (s^r) by removing vertical dominoes, as column heights."""
    start = (r,) * s
    seen = {start}
    todo = [start]
    while todo:
        cols = todo.pop()
        for c in range(len(cols)):
            h = cols[c]
            # removing the bottom two cells of column c keeps a partition
            # only when the next column is not taller than h - 2
            nxt = cols[c + 1] if c + 1 < len(cols) else 0
            if h >= 2 and nxt <= h - 2:
                new = cols[:c] + (h - 2,) + cols[c + 1:]
                if new not in seen:
                    seen.add(new)
                    todo.append(new)
    return seen


def _heights_to_partition(heights):
    heights = [h for h in heights if h > 0]
    if not heights:
        return ()
    return tuple(sum(1 for h in heights if h > j) for j in range(max(heights)))


def _partition_to_heights(lam, s):
    lam = [x for x in lam if x > 0]
    heights = [sum(1 for x in lam if x > c) for c in range(s)]
    return tuple(heights)


def classical_decomposition(spec, r, s):
    """Highest weights of the classical components of B^{r,s}, as partitions.

    Partitions are tuples of row lengths.  For the spin nodes of type D the
    single entry (s,)*r stands for s times the fundamental weight of node r.
    """
    spec.check_node(r)
    if s < 1:
        raise ValueError("width must be positive")
    if spec.is_d and r <= spec.rank - 2:
        shapes = {_heights_to_partition(h) for h in _domino_shapes(r, s)}
        return sorted(shapes, key=lambda lam: (-sum(lam), [-x for x in lam]))
    return [(s,) * r]


def fill(spec, lam, r, s):
    """The r x s tableau of the highest element of weight lam inside B^{r,s}."""
    lam = tuple(x for x in lam if x > 0)
    if not spec.is_d:
        if lam != (s,) * r:
            raise ValueError(f"{lam} is not in the decomposition of B^{{{r},{s}}}")
        return KRTableau(r, s, tuple(tuple(range(1, r + 1)) for _ in range(s)))
    if r > spec.rank - 2:
        raise ValueError("fill is only defined for r <= n-2; spin nodes use sign columns")
    if lam not in classical_decomposition(spec, r, s):
        raise ValueError(f"{lam} is not in the decomposition of B^{{{r},{s}}}")
    heights = list(_partition_to_heights(lam, s))
    k = {h: heights.count(h) for h in range(r + 1)}
    c = -1
    for h in range(r - 2, -1, -2):
        if k[h] % 2:
            c = h
            break

    # each entry: [height, cells]; cells top to bottom, None when empty
    cols = [[h, list(range(1, h + 1)) + [None] * (r - h)] for h in heights]
    if c >= 0:
        pos = max(j for j, col in enumerate(cols) if col[0] == c)
        del cols[pos]
        cols.append([None, [None] * r])  # reserved rightmost column

    for h in range(r - 1, -1, -1):
        if c >= 0 and h < c:
            break
        group = [col for col in cols if col[0] == h]
        for first, second in zip(group[::2], group[1::2]):
            first[1][h:] = [-v for v in range(r, h, -1)]
            second[1][h:] = list(range(h + 1, r + 1))

    if c >= 0:
        x = c + 1
        for col in cols[:-1]:
            h = col[0]
            if h is None or h >= c:
                continue
            y = r - x + h + 2
            col[1][h:] = list(range(y, r + 1)) + [-v for v in range(r, x - 1, -1)]
            x = y
        y = (r + x - 1) // 2
        cols[-1][1] = list(range(1, y + 1)) + [-v for v in range(y, x - 1, -1)]

    out = tuple(tuple(col[1]) for col in cols)
    if any(len(col) != r or None in col for col in out):
        raise RuntimeError(f"fill produced an incomplete tableau for {lam}")
    return KRTableau(r, s, out)


def highest_tableaux(spec, r, s):
    """The classically highest elements of B^{r,s} used to seed the closure."""
    spec.check_node(r)
    if is_spin_shape(spec, r):
        return [KRTableau(r, s, (spin_seed(spec.rank, r),) * s, True)]
    return [fill(spec, lam, r, s) for lam in classical_decomposition(spec, r, s)]


def closure(spec, seeds, step, cap=DEFAULT_CAP):
    """Breadth-first closure of seeds under step(x, i) for every classical node."""
    seen = dict.fromkeys(seeds)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for i in spec.nodes:
            y = step(x, i)
            if y is not None and y not in seen:
                seen[y] = None
                if len(seen) > cap:
                    raise RuntimeError(f"closure exceeded the cap of {cap} elements")
                queue.append(y)
    return list(seen)


@lru_cache(maxsize=None)
def _kr_elements(spec, r, s, cap):
    seeds = highest_tableaux(spec, r, s)
    return tuple(closure(spec, seeds, lambda t, i: tableau_op(spec, t, i, "f"), cap))


def kr_elements(spec, r, s, cap=DEFAULT_CAP):
    """All elements of B^{r,s}, in breadth-first order from the highest ones."""
    return list(_kr_elements(spec, r, s, cap))


def path_elements(spec, shape, cap=DEFAULT_CAP):
    """Every path of the given shape (the full tensor product), leftmost factor slowest."""
    pools = [kr_elements(spec, r, s, cap) for r, s in shape]
    total = 1
    for pool in pools:
        total *= len(pool)
    if total > cap:
        raise RuntimeError(f"tensor product has {total} elements, over the cap of {cap}")
    out = [()]
    for pool in pools:
        out = [prefix + (t,) for prefix in out for t in pool]
    return [Path(spec, f) for f in out]


# left operations on paths

def lh(p):
    if not p.factors or p.shape[0] != (1, 1):
        raise ValueError("lh needs a leftmost factor B^{1,1}")
    return Path(p.spec, p.factors[1:])


def lb(p):
    if not p.factors:
        raise ValueError("lb needs a nonempty path")
    t = p.factors[0]
    if t.s != 1 or t.r < 2 or t.spin:
        raise ValueError("lb needs a leftmost non-spin factor B^{r,1} with r > 1")
    col = t.cols[0]
    head = KRTableau(1, 1, ((col[-1],),))
    rest = KRTableau(t.r - 1, 1, (col[:-1],))
    return Path(p.spec, (head, rest) + p.factors[1:])


def ls(p):
    if not p.factors or p.factors[0].s < 2:
        raise ValueError("ls needs a leftmost factor of width > 1")
    t = p.factors[0]
    first = KRTableau(t.r, 1, t.cols[:1], t.spin)
    rest = KRTableau(t.r, t.s - 1, t.cols[1:], t.spin)
    return Path(p.spec, (first, rest) + p.factors[1:])
