"""The rigged configuration bijection Phi, its inverse, and the combinatorial R-matrix.

A single peeling step (delta) is described by a mode:

    ("std", a, l)   leftmost factor B^{a,l}; the ordinary delta^{(a)}_l
    ("hat2", t)     leftmost factor B^{t,2} of a doubled configuration, t a spin node
    ("spin1", t)    leftmost factors B^{t',1} (x) B^{t,1}, t' the other spin node

The two spin modes are only used inside the column peel of B^{n,l} / B^{n-1,l}.
"""

from dataclasses import dataclass

from .crystal_tableaux import KRTableau, Path, is_spin_shape, signs_from_letters, spin_letters
from .rigged_config import RiggedConfiguration, Vacancy, empty_rc, is_admissible, vacancies



@dataclass(frozen=True)
class DeltaOutcome:
    rc_after: RiggedConfiguration
    letter: int
    selected: tuple  # (node, "fwd" | "ret", original length) for each selected string


def _other(spec, t):
    n = spec.rank
    return n - 1 if t == n else n


def _mode_shapes(spec, shape, mode):
    """Check that mode applies to shape; return the shape after peeling."""
    shape = tuple(shape)
    kind = mode[0]
    if kind == "std":
        _, a, l = mode
        if not shape or shape[0] != (a, l):
            raise ValueError(f"leftmost factor must be B^{{{a},{l}}}, shape is {list(shape)}")
        if spec.is_d and a > spec.rank - 2:
            raise ValueError("spin factors are peeled by the spin column procedure")
        head = ((a - 1, 1),) if a > 1 else ()
        mid = ((a, l - 1),) if l > 1 else ()
        return head + mid + shape[1:]
    t = mode[1]
    u = _other(spec, t)
    if kind == "hat2":
        if not shape or shape[0] != (t, 2):
            raise ValueError(f"leftmost factor must be B^{{{t},2}}, shape is {list(shape)}")
        return ((u, 1), (t, 1)) + shape[1:]
    if kind == "spin1":
        if shape[:2] != ((u, 1), (t, 1)):
            raise ValueError(f"shape must start with B^{{{u},1}} B^{{{t},1}}, got {list(shape)}")
        head = ((spec.rank - 2, 1),) if spec.rank > 2 else ()
        return head + shape[2:]
    raise ValueError(f"unknown mode {mode!r}")


def _first(ties):
    return ties[0]


class _Picker:
    def __init__(self, rc, choose):
        self.rc = rc
        self.vac = vacancies(rc)
        self.choose = choose

    def shortest(self, a, lower, exclude=None):
        """Index of a shortest singular string at node a of length >= lower."""
        rows = self.rc.rows(a)
        cands = [j for j, (l, x) in enumerate(rows)
                 if l >= lower and j != exclude and x == self.vac(a, l)]
        if not cands:
            return None
        m = min(rows[j][0] for j in cands)
        return self.choose([j for j in cands if rows[j][0] == m])

    def length(self, a, j):
        return self.rc.rows(a)[j][0]


def _select(rc, mode, choose=_first):
    """Run the selection of delta; return (letter, [(node, pass, index)])."""
    spec = rc.spec
    n = spec.rank
    pick = _Picker(rc, choose)
    sel = []
    fwd = {}

    def spin_step(bound):
        j1 = pick.shortest(n - 1, bound)
        j2 = pick.shortest(n, bound)
        if j1 is None and j2 is None:
            return n - 1
        if j2 is None:
            sel.append((n - 1, "fwd", j1))
            return n
        if j1 is None:
            sel.append((n, "fwd", j2))
            return -n
        sel.append((n - 1, "fwd", j1))
        sel.append((n, "fwd", j2))
        return return_pass(max(pick.length(n - 1, j1), pick.length(n, j2)))

    def return_pass(bound):
        for i in range(n - 2, 0, -1):
            j = pick.shortest(i, bound, exclude=fwd.get(i))
            if j is None:
                return -(i + 1)
            sel.append((i, "ret", j))
            bound = pick.length(i, j)
        return -1

    kind = mode[0]
    if kind == "std":
        _, a, bound = mode
        top = n if not spec.is_d else n - 2
        for i in range(a, top + 1):
            j = pick.shortest(i, bound)
            if j is None:
                return i, sel
            sel.append((i, "fwd", j))
            fwd[i] = j
            bound = pick.length(i, j)
        if not spec.is_d:
            return n + 1, sel
        return spin_step(bound), sel
    if kind == "spin1":
        return spin_step(1), sel
    t = mode[1]
    j = pick.shortest(t, 2)
    if j is None:
        return (n if t == n else -n), sel
    sel.append((t, "fwd", j))
    return return_pass(pick.length(t, j)), sel


def _apply(rc, new_shape, changes, grow):
    """Shift the lengths of the chosen rows by grow (+1 or -1), then make them singular.

    changes holds (node, index) pairs; index None means a new row of length 0.
    """
    spec = rc.spec
    rows = [[list(r) for r in rc.rows(a)] for a in spec.nodes]
    touched = [set() for _ in spec.nodes]
    for a, j in changes:
        if j is None:
            rows[a - 1].append([0, 0])
            j = len(rows[a - 1]) - 1
        rows[a - 1][j][0] += grow
        touched[a - 1].add(j)
    nu_len = [[(l, 0) for l, _ in part if l > 0] for part in rows]
    vac = Vacancy(spec, new_shape, nu_len)
    nu = []
    for a in spec.nodes:
        part = []
        for j, (l, x) in enumerate(rows[a - 1]):
            if l <= 0:
                continue
            part.append((l, vac(a, l) if j in touched[a - 1] else x))
        nu.append(part)
    return RiggedConfiguration(spec, new_shape, tuple(nu))


def _delta(rc, mode, choose=_first):
    new_shape = _mode_shapes(rc.spec, rc.shape, mode)
    letter, sel = _select(rc, mode, choose)
    after = _apply(rc, new_shape, [(a, j) for a, _, j in sel], -1)
    record = tuple((a, p, rc.rows(a)[j][0]) for a, p, j in sel)
    return DeltaOutcome(after, letter, record)


def delta(rc, a=None, l=None):
    """delta^{(a)}_l on the leftmost factor B^{a,l} (read off the shape when omitted)."""
    if not rc.shape:
        raise ValueError("cannot peel an empty shape")
    r, s = rc.shape[0]
    a = r if a is None else a
    l = s if l is None else l
    return _delta(rc, ("std", a, l))


def delta_hat2(rc, t=None):
    t = rc.spec.rank if t is None else t
    return _delta(rc, ("hat2", t))


def delta_hat1(rc, t=None):
    t = rc.spec.rank if t is None else t
    return _delta(rc, ("spin1", t))


def delta_branches(rc, mode):
    """Outcomes of delta for every way of breaking ties between equal candidates."""
    outcomes = []
    pending = [()]
    while pending:
        prefix = pending.pop()
        trace = []

        def choose(ties, prefix=prefix, trace=trace):
            k = len(trace)
            if k < len(prefix):
                c = prefix[k]
            else:
                c = 0
                for alt in range(1, len(ties)):
                    pending.append(tuple(trace) + (alt,))
            trace.append(c)
            return ties[c]

        outcomes.append(_delta(rc, mode, choose))
    return outcomes


# inverse of delta

def _before_shape(spec, shape, mode):
    shape = tuple(shape)
    kind = mode[0]
    if kind == "std":
        _, a, l = mode
        head = ((a - 1, 1),) if a > 1 else ()
        mid = ((a, l - 1),) if l > 1 else ()
        pre = head + mid
        if shape[:len(pre)] != pre:
            raise ValueError(f"shape {list(shape)} does not come from peeling B^{{{a},{l}}}")
        return ((a, l),) + shape[len(pre):]
    t = mode[1]
    u = _other(spec, t)
    if kind == "hat2":
        if shape[:2] != ((u, 1), (t, 1)):
            raise ValueError(f"shape {list(shape)} does not come from peeling B^{{{t},2}}")
        return ((t, 2),) + shape[2:]
    pre = ((spec.rank - 2, 1),)
    if shape[:1] != pre:
        raise ValueError(f"shape {list(shape)} does not come from peeling two spin factors")
    return ((u, 1), (t, 1)) + shape[1:]


def _inverse_plan(spec, k, mode):
    """Nodes touched by delta for letter k: (forward nodes, spin nodes, return nodes)."""
    n = spec.rank
    kind = mode[0]
    bad = ValueError(f"letter {k} cannot be produced by {mode}")
    if not spec.is_d:
        a = mode[1]
        if not a <= k <= n + 1:
            raise bad
        return list(range(a, k)), [], []
    if kind == "hat2":
        t = mode[1]
        if k == (n if t == n else -n):
            return [], [], []
        if k >= 0 or -k > n - 1:
            raise bad
        return [], [t], list(range(n - 2, -k - 1, -1))
    a = mode[1] if kind == "std" else n - 1
    if 0 < k < n - 1:
        if k < a:
            raise bad
        return list(range(a, k)), [], []
    fwd = list(range(a, n - 1))
    if k == n - 1:
        return fwd, [], []
    if k == n:
        return fwd, [n - 1], []
    if k == -n:
        return fwd, [n], []
    if -n < k < 0:
        return fwd, [n - 1, n], list(range(n - 2, -k - 1, -1))
    raise bad


def _longest(rc, vac, a, bound, exclude=None):
    """Index of a longest singular string at node a of length <= bound (None: no bound)."""
    rows = rc.rows(a)
    cands = [j for j, (l, x) in enumerate(rows)
             if (bound is None or l <= bound) and j != exclude and x == vac(a, l)]
    if not cands:
        return None
    m = max(rows[j][0] for j in cands)
    return next(j for j in cands if rows[j][0] == m)


def _delta_inv(rc, k, mode):
    spec = rc.spec
    before = _before_shape(spec, rc.shape, mode)
    fwd, spin, ret = _inverse_plan(spec, k, mode)
    vac = vacancies(rc)
    changes = []
    chosen = {}

    def length(a, j):
        return 0 if j is None else rc.rows(a)[j][0]

    bound = None
    for a in reversed(ret):
        j = _longest(rc, vac, a, bound)
        changes.append((a, j))
        chosen[a] = j
        bound = length(a, j)
    ret_bound = bound
    spin_lengths = []
    for a in spin:
        j = _longest(rc, vac, a, ret_bound)
        if mode[0] == "hat2" and (j is None or length(a, j) < 1):
            raise ValueError(f"letter {k} cannot be inserted: no singular string of length >= 1 at node {a}")
        changes.append((a, j))
        spin_lengths.append(length(a, j))
    bound = min(spin_lengths) if spin_lengths else None
    for a in reversed(fwd):
        excl = chosen.get(a)
        j = _longest(rc, vac, a, bound, exclude=excl)
        changes.append((a, j))
        bound = length(a, j)
    if mode[0] == "std" and fwd and mode[2] > 1:
        a, j = changes[-1]
        if length(a, j) < mode[2] - 1:
            raise ValueError(f"letter {k} cannot be inserted: node {a} has no string long enough")
    return _apply(rc, before, changes, +1)


def delta_inv(rc, k, a, l, check=True):
    """Inverse of delta^{(a)}_l: insert letter k and restore the factor B^{a,l}."""
    return _delta_inv_mode(rc, k, ("std", a, l), check)


def _delta_inv_mode(rc, k, mode, check=True):
    out = _delta_inv(rc, k, mode)
    if check:
        fwd = _delta(out, mode)
        if fwd.letter != k or fwd.rc_after != rc:
            raise ValueError(f"letter {k} is not in the image of {mode} over this configuration")
    return out


# shape operations

def gamma(rc):
    if not rc.shape or rc.shape[0][1] < 2:
        raise ValueError("gamma needs a leftmost factor of width > 1")
    a, l = rc.shape[0]
    return rc.with_nu(rc.nu, ((a, 1), (a, l - 1)) + rc.shape[1:])


def _add_singular_ones(rc, new_shape, nodes):
    vac = Vacancy(rc.spec, new_shape, [list(rc.rows(a)) + ([(1, 0)] if a in nodes else [])
                                       for a in rc.spec.nodes])
    nu = [list(rc.rows(a)) + ([(1, vac(a, 1))] if a in nodes else []) for a in rc.spec.nodes]
    return RiggedConfiguration(rc.spec, new_shape, tuple(nu))


def beta(rc):
    spec = rc.spec
    if not rc.shape:
        raise ValueError("beta needs a nonempty shape")
    r, s = rc.shape[0]
    top = spec.rank - 2 if spec.is_d else spec.rank
    if s != 1 or not 1 < r <= top:
        raise ValueError(f"beta needs a leftmost factor B^{{r,1}} with 1 < r <= {top}")
    new_shape = ((1, 1), (r - 1, 1)) + rc.shape[1:]
    return _add_singular_ones(rc, new_shape, set(range(1, r)))


def hat_beta_n(rc):
    spec = rc.spec
    n = spec.rank
    if not spec.is_d or not rc.shape or rc.shape[0] != (n, 2):
        raise ValueError("hat_beta_n needs a type D shape with leftmost factor B^{n,2}")
    new_shape = ((1, 1), (n - 1, 1), (n, 1)) + rc.shape[1:]
    return _add_singular_ones(rc, new_shape, set(range(1, n)))


def hat_beta_n_minus_1(rc):
    spec = rc.spec
    n = spec.rank
    if not spec.is_d or len(rc.shape) < 2 or {rc.shape[0], rc.shape[1]} != {(n - 1, 1), (n, 1)}:
        raise ValueError("hat_beta_n_minus_1 needs leftmost factors B^{n-1,1} and B^{n,1}")
    new_shape = ((1, 1), (n - 2, 1)) + rc.shape[2:]
    return _add_singular_ones(rc, new_shape, set(range(1, n - 1)))


def emb(rc):
    nu = [[(2 * l, 2 * x) for l, x in rc.rows(a)] for a in rc.spec.nodes]
    return RiggedConfiguration(rc.spec, tuple((r, 2 * s) for r, s in rc.shape), tuple(nu))


def emb_inv(rc):
    values = [s for _, s in rc.shape] + [v for a in rc.spec.nodes for row in rc.rows(a) for v in row]
    if any(v % 2 for v in values):
        raise ValueError("configuration has odd lengths or riggings and is not in the doubled image")
    nu = [[(l // 2, x // 2) for l, x in rc.rows(a)] for a in rc.spec.nodes]
    return RiggedConfiguration(rc.spec, tuple((r, s // 2) for r, s in rc.shape), tuple(nu))


# Phi

def _spin_moves(spec, t):
    n = spec.rank
    return [("hat2", t), ("spin1", t)] + [("std", a, 1) for a in range(n - 2, 0, -1)]


def phi_spin_column(rc, hook=None):
    """Peel one column off a leftmost spin factor; return (sign vector, rc_after)."""
    spec = rc.spec
    n = spec.rank
    if not rc.shape or not is_spin_shape(spec, rc.shape[0][0]):
        raise ValueError("leftmost factor is not a spin factor")
    t, l = rc.shape[0]
    cur = gamma(rc) if l > 1 else rc
    cur = emb(cur)
    out = {}
    for mode in _spin_moves(spec, t):
        if hook:
            hook(cur, mode)
        res = _delta(cur, mode)
        row = n if mode[0] == "hat2" else (n - 1 if mode[0] == "spin1" else mode[1])
        out[row] = res.letter
        cur = res.rc_after
    try:
        cur = emb_inv(cur)
    except ValueError as err:
        raise RuntimeError(f"spin column peel left odd data: {err}") from None
    col = tuple(out[j] for j in range(1, n + 1))
    signs = signs_from_letters(col, n)
    if spin_letters(signs) != col:
        raise RuntimeError(f"spin column peel produced an unsorted column {col}")
    prod = 1
    for v in signs:
        prod *= v
    if prod != (1 if t == n else -1):
        raise RuntimeError(f"spin column {col} has the wrong parity for node {t}")
    return signs, cur


def phi(rc, hook=None):
    """The bijection from rigged configurations to paths.

    hook(rc, mode), if given, is called before every delta step.
    """
    if not is_admissible(rc):
        raise ValueError("rigged configuration is not admissible (some rigging exceeds its vacancy number)")
    spec = rc.spec
    cur = rc
    factors = []
    for r, s in rc.shape:
        cols = []
        spin = is_spin_shape(spec, r)
        for _ in range(s):
            if spin:
                signs, cur = phi_spin_column(cur, hook)
                cols.append(signs)
                continue
            col = [0] * r
            for a in range(r, 0, -1):
                mode = ("std", a, cur.shape[0][1])
                if hook:
                    hook(cur, mode)
                res = _delta(cur, mode)
                col[a - 1] = res.letter
                cur = res.rc_after
            cols.append(tuple(col))
        factors.append(KRTableau(r, s, tuple(cols), spin))
    if cur.shape or any(cur.nu):
        raise RuntimeError("configuration was not exhausted by the bijection")
    return Path(spec, tuple(factors))


def _insert_column(cur, r, done, col, spin):
    spec = cur.spec
    n = spec.rank
    if not spin:
        for a in range(1, r):
            cur = _delta_inv_mode(cur, col[a - 1], ("std", a, 1))
        return _delta_inv_mode(cur, col[r - 1], ("std", r, done + 1))
    t = r
    letters_col = spin_letters(col)
    cur = emb(cur)
    for a in range(1, n - 1):
        cur = _delta_inv_mode(cur, letters_col[a - 1], ("std", a, 1))
    cur = _delta_inv_mode(cur, letters_col[n - 2], ("spin1", t))
    cur = _delta_inv_mode(cur, letters_col[n - 1], ("hat2", t))
    cur = emb_inv(cur)
    if done:
        cur = cur.with_nu(cur.nu, ((t, done + 1),) + cur.shape[2:])
    return cur


def phi_inv(p):
    """The inverse bijection from paths to rigged configurations."""
    spec = p.spec
    cur = empty_rc(spec, ())
    for t in reversed(p.factors):
        spin = is_spin_shape(spec, t.r)
        if spin != t.spin:
            raise ValueError(f"factor B^{{{t.r},{t.s}}} has the wrong spin flag")
        for c in range(t.s - 1, -1, -1):
            cur = _insert_column(cur, t.r, t.s - 1 - c, t.cols[c], spin)
    return cur


def combinatorial_r(p):
    """The crystal isomorphism B2 (x) B1 -> B1 (x) B2 through rigged configurations."""
    if len(p.factors) != 2:
        raise ValueError(f"combinatorial_r needs exactly 2 factors, got {len(p.factors)}")
    rc = phi_inv(p)
    swapped = rc.with_nu(rc.nu, (rc.shape[1], rc.shape[0]))
    return phi(swapped)
