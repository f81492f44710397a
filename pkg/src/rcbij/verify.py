"""Exhaustive property checks over small shapes.

Each check returns a SuiteReport.  Failures carry the offending input in the
JSON wire format so a single CLI call can replay them.
"""

import json
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Callable, NamedTuple

from . import wire
from .bijection import (
    _delta,
    beta,
    combinatorial_r,
    delta,
    delta_branches,
    delta_inv,
    gamma,
    phi,
    phi_inv,
)
from .crystal_tableaux import (
    DEFAULT_CAP,
    kr_elements,
    lb,
    lh,
    ls,
    path_elements,
    path_op,
    path_signature,
    path_weight,
)
from .rigged_config import (
    convexity_violations,
    enumerate_all,
    is_highest,
    rc_eps,
    rc_op,
    rc_phi,
    rc_weight,
)
from .crystal_tableaux import is_path_highest
from .root_data import DynkinSpec, coroot_pairing, simple_root, vadd, vsub

MAX_STORED = 25


@dataclass
class SuiteReport:
    suite: str
    spec: str
    shape: list
    checked: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0

    @property
    def passed(self):
        return self.failure_count == 0

    def fail(self, what, data, expected, got):
        self.failure_count += 1
        if len(self.failures) < MAX_STORED:
            self.failures.append({"check": what, "input": data, "expected": expected, "got": got})

    def to_json(self):
        return {
            "suite": self.suite,
            "spec": self.spec,
            "shape": [list(x) for x in self.shape],
            "checked": self.checked,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures": self.failures,
        }


def _rc(rc):
    return None if rc is None else wire.rc_to_json(rc)


def _path(p):
    return None if p is None else wire.path_to_json(p)


def _weight(w):
    return [str(x) for x in w]


@lru_cache(maxsize=64)
def _rcs(spec, shape, cap=DEFAULT_CAP):
    return tuple(enumerate_all(spec, shape, cap))


@lru_cache(maxsize=64)
def _phi_table(spec, shape, cap=DEFAULT_CAP):
    return {rc: phi(rc) for rc in _rcs(spec, shape, cap)}


def _phi_of(table, rc):
    if rc is None:
        return None
    got = table.get(rc)
    return phi(rc) if got is None else got


# crystal axioms

class CrystalOps(NamedTuple):
    spec: DynkinSpec
    e: Callable
    f: Callable
    eps: Callable
    phi: Callable
    wt: Callable
    dump: Callable


def rc_crystal(spec):
    return CrystalOps(spec, lambda b, i: rc_op(b, i, "e"), lambda b, i: rc_op(b, i, "f"),
                      rc_eps, rc_phi, rc_weight, _rc)


def path_crystal(spec):
    return CrystalOps(spec, lambda b, i: path_op(b, i, "e"), lambda b, i: path_op(b, i, "f"),
                      lambda b, i: path_signature(b, i).eps, lambda b, i: path_signature(b, i).phi,
                      path_weight, _path)


def _string_length(op, b, i):
    m = 0
    while True:
        b = op(b, i)
        if b is None:
            return m
        m += 1


def check_axioms(elements, ops, name="axioms", shape=()):
    spec = ops.spec
    report = SuiteReport(name, str(spec), list(shape))
    members = set(elements)
    for b in elements:
        wt = ops.wt(b)
        for i in spec.nodes:
            report.checked += 1
            ep, ph = ops.eps(b, i), ops.phi(b, i)
            alpha = simple_root(spec, i)
            if ep < 0 or ph < 0:
                report.fail("eps/phi finite and nonnegative", ops.dump(b), ">= 0", [ep, ph])
            if ph != ep + coroot_pairing(spec, i, wt):
                report.fail("phi = eps + <h_i, wt>", ops.dump(b), ep + coroot_pairing(spec, i, wt), ph)
            it_e, it_f = _string_length(ops.e, b, i), _string_length(ops.f, b, i)
            if (it_e, it_f) != (ep, ph):
                report.fail("eps/phi equal iterated operator counts", ops.dump(b), [it_e, it_f], [ep, ph])
            up, down = ops.e(b, i), ops.f(b, i)
            if up is not None:
                if up not in members:
                    report.fail("closed under e_i", ops.dump(b), "member", ops.dump(up))
                if ops.wt(up) != vadd(wt, alpha):
                    report.fail("wt(e_i b) = wt(b) + alpha_i", ops.dump(b), _weight(vadd(wt, alpha)), _weight(ops.wt(up)))
                if (ops.eps(up, i), ops.phi(up, i)) != (ep - 1, ph + 1):
                    report.fail("e_i shifts eps/phi", ops.dump(b), [ep - 1, ph + 1], [ops.eps(up, i), ops.phi(up, i)])
                if ops.f(up, i) != b:
                    report.fail("f_i e_i b = b", ops.dump(b), ops.dump(b), ops.dump(ops.f(up, i)))
            elif ep != 0:
                report.fail("e_i b = 0 iff eps = 0", ops.dump(b), 0, ep)
            if down is not None:
                if down not in members:
                    report.fail("closed under f_i", ops.dump(b), "member", ops.dump(down))
                if ops.wt(down) != vsub(wt, alpha):
                    report.fail("wt(f_i b) = wt(b) - alpha_i", ops.dump(b), _weight(vsub(wt, alpha)), _weight(ops.wt(down)))
                if (ops.eps(down, i), ops.phi(down, i)) != (ep + 1, ph - 1):
                    report.fail("f_i shifts eps/phi", ops.dump(b), [ep + 1, ph - 1], [ops.eps(down, i), ops.phi(down, i)])
                if ops.e(down, i) != b:
                    report.fail("e_i f_i b = b", ops.dump(b), ops.dump(b), ops.dump(ops.e(down, i)))
            elif ph != 0:
                report.fail("f_i b = 0 iff phi = 0", ops.dump(b), 0, ph)
    return report


def check_rc_axioms(spec, shape, cap=DEFAULT_CAP):
    return check_axioms(_rcs(spec, tuple(shape), cap), rc_crystal(spec), "axioms-rc", shape)


def check_path_axioms(spec, shape, cap=DEFAULT_CAP):
    return check_axioms(path_elements(spec, tuple(shape), cap), path_crystal(spec), "axioms-path", shape)


# the bijection

def check_commutativity(spec, shape, cap=DEFAULT_CAP, elements=None):
    """Phi intertwines e_i, f_i; plus the one-step diagrams when the leftmost factor is B^{1,1}."""
    shape = tuple(shape)
    report = SuiteReport("commutativity", str(spec), list(shape))
    table = _phi_table(spec, shape, cap) if elements is None else {rc: phi(rc) for rc in elements}
    for rc, b in table.items():
        for i in spec.nodes:
            for d in "ef":
                report.checked += 1
                moved = rc_op(rc, i, d)
                lhs = _phi_of(table, moved)
                rhs = path_op(b, i, d)
                if lhs != rhs:
                    report.fail(f"Phi({d}_{i} rc) = {d}_{i} Phi(rc)", _rc(rc), _path(rhs), _path(lhs))
        if shape[0] == (1, 1):
            _check_core(report, rc, b)
    return report


def _check_core(report, rc, b):
    spec = rc.spec
    out = delta(rc)
    rest, b_rest = out.rc_after, lh(b)
    if phi(rest) != b_rest:
        report.fail("lh(Phi(rc)) = Phi(delta(rc))", _rc(rc), _path(b_rest), _path(phi(rest)))
        return
    for i in spec.nodes:
        for d in "ef":
            big, small = rc_op(rc, i, d), rc_op(rest, i, d)
            pbig, psmall = path_op(b, i, d), path_op(b_rest, i, d)
            tag = f"{d}_{i}"
            if (big is None) != (pbig is None) or (small is None) != (psmall is None):
                report.fail(f"{tag}: vanishing matches on both levels", _rc(rc),
                            [pbig is None, psmall is None], [big is None, small is None])
                continue
            if big is not None and small is not None:
                after = delta(big)
                # e_i may act on the leftmost letter even when it is defined below;
                # then the tail is untouched instead of moved
                on_head = d == "e" and path_signature(b, i).e_pos == 0
                want = (rest, None) if on_head else (small, out.letter)
                got = (after.rc_after, None if on_head else after.letter)
                if got != want:
                    report.fail(f"{tag} commutes with delta when defined on both levels", _rc(rc),
                                _rc(want[0]), _rc(after.rc_after))
            if d == "e" and big is None and small is not None:
                report.fail(f"{tag}: e vanishing on top but not below is impossible", _rc(rc), None, _rc(small))


def check_bijection(spec, shape, cap=DEFAULT_CAP):
    shape = tuple(shape)
    report = SuiteReport("bijection", str(spec), list(shape))
    table = _phi_table(spec, shape, cap)
    expected = 1
    for r, s in shape:
        expected *= len(kr_elements(spec, r, s, cap))
    report.checked += 1
    if len(table) != expected:
        report.fail("number of rigged configurations", None, expected, len(table))
    images = {}
    for rc, b in table.items():
        report.checked += 1
        if b in images:
            report.fail("Phi injective", _rc(rc), _rc(images[b]), _path(b))
        images[b] = rc
        back = phi_inv(b)
        if back != rc:
            report.fail("Phi^-1 Phi = id", _rc(rc), _rc(rc), _rc(back))
        if rc_weight(rc) != path_weight(b):
            report.fail("weight preserved", _rc(rc), _weight(rc_weight(rc)), _weight(path_weight(b)))
        if is_highest(rc) != is_path_highest(b):
            report.fail("highest maps to highest", _rc(rc), is_highest(rc), is_path_highest(b))
    for b in path_elements(spec, shape, cap):
        report.checked += 1
        if b not in images:
            report.fail("Phi surjective", _path(b), "some rc", None)
            continue
        try:
            rc = phi_inv(b)
        except ValueError as err:
            report.fail("Phi^-1 defined", _path(b), "rc", str(err))
            continue
        if phi(rc) != b:
            report.fail("Phi Phi^-1 = id", _path(b), _path(b), _path(phi(rc)))
    return report


def check_convexity(spec, shape, cap=DEFAULT_CAP, elements=None):
    shape = tuple(shape)
    report = SuiteReport("convexity", str(spec), list(shape))
    for rc in (_rcs(spec, shape, cap) if elements is None else elements):
        report.checked += 1
        for bad in convexity_violations(rc):
            kind, a, l, value, bound = bad
            report.fail(f"{kind} at node {a}, length {l}", _rc(rc), f">= {bound}", value)
    return report


def check_delta_determinism(spec, shape, cap=DEFAULT_CAP):
    """Every tie-breaking choice inside every delta step of Phi gives the same outcome."""
    shape = tuple(shape)
    report = SuiteReport("determinism", str(spec), list(shape))

    def hook(cur, mode):
        report.checked += 1
        first = _delta(cur, mode)
        for other in delta_branches(cur, mode):
            if (other.letter, other.rc_after) != (first.letter, first.rc_after):
                report.fail(f"tie choice in {mode} changes the outcome", _rc(cur),
                            [first.letter, _rc(first.rc_after)], [other.letter, _rc(other.rc_after)])

    for rc in _rcs(spec, shape, cap):
        phi(rc, hook=hook)
    return report


def check_decomposition(spec, shape, cap=DEFAULT_CAP):
    """delta/lh, gamma/ls and beta/lb squares, and delta_inv undoing delta."""
    shape = tuple(shape)
    report = SuiteReport("decomposition", str(spec), list(shape))
    table = _phi_table(spec, shape, cap)
    r, s = shape[0]
    spin = spec.is_d and r >= spec.rank - 1
    for rc, b in table.items():
        report.checked += 1
        if spin:
            continue
        out = delta(rc)
        back = delta_inv(out.rc_after, out.letter, r, s)
        if back != rc:
            report.fail("delta_inv undoes delta", _rc(rc), _rc(rc), _rc(back))
        if s > 1:
            g = gamma(rc)
            if phi(g) != ls(b):
                report.fail("Phi(gamma(rc)) = ls(Phi(rc))", _rc(rc), _path(ls(b)), _path(phi(g)))
        elif r > 1 and (not spec.is_d or r <= spec.rank - 2):
            bt = beta(rc)
            if phi(bt) != lb(b):
                report.fail("Phi(beta(rc)) = lb(Phi(rc))", _rc(rc), _path(lb(b)), _path(phi(bt)))
        elif (r, s) == (1, 1) and phi(out.rc_after) != lh(b):
            report.fail("Phi(delta(rc)) = lh(Phi(rc))", _rc(rc), _path(lh(b)), _path(phi(out.rc_after)))
    return report


def check_r_isomorphism(spec, shape2, cap=DEFAULT_CAP):
    shape2 = tuple(shape2)
    if len(shape2) != 2:
        raise ValueError("the R-matrix check needs a two-factor shape")
    report = SuiteReport("rmatrix", str(spec), list(shape2))
    swapped = (shape2[1], shape2[0])
    source = path_elements(spec, shape2, cap)
    target = set(path_elements(spec, swapped, cap))
    image = {}
    for p in source:
        report.checked += 1
        q = combinatorial_r(p)
        if q in image:
            report.fail("R injective", _path(p), _path(image[q]), _path(q))
        image[q] = p
        if q not in target:
            report.fail("R lands in the swapped product", _path(p), "member", _path(q))
        if path_weight(q) != path_weight(p):
            report.fail("R preserves weight", _path(p), _weight(path_weight(p)), _weight(path_weight(q)))
        back = combinatorial_r(q)
        if back != p:
            report.fail("R R = id", _path(p), _path(p), _path(back))
        for i in spec.nodes:
            for d in "ef":
                moved = path_op(p, i, d)
                lhs = None if moved is None else combinatorial_r(moved)
                rhs = path_op(q, i, d)
                if lhs != rhs:
                    report.fail(f"R commutes with {d}_{i}", _path(p), _path(rhs), _path(lhs))
    report.checked += 1
    if set(image) != target:
        report.fail("R surjective", None, len(target), len(image))
    return report


def check_pairs(pairs):
    """Each (rc, path) pair must satisfy Phi(rc) = path."""
    report = SuiteReport("pairs", "", [])
    for rc, p in pairs:
        report.checked += 1
        report.spec = str(rc.spec)
        try:
            got = phi(rc)
        except ValueError as err:
            report.fail("Phi(rc) = path", _rc(rc), _path(p), str(err))
            continue
        if got != p:
            report.fail("Phi(rc) = path", _rc(rc), _path(p), _path(got))
    return report


SUITES = {
    "commutativity": check_commutativity,
    "bijection": check_bijection,
    "axioms-rc": check_rc_axioms,
    "axioms-path": check_path_axioms,
    "convexity": check_convexity,
    "determinism": check_delta_determinism,
    "decomposition": check_decomposition,
    "rmatrix": check_r_isomorphism,
}


def run_suite(name, spec, shape, cap=DEFAULT_CAP):
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name](spec, tuple(tuple(x) for x in shape), cap)


def default_battery():
    text = resources.files("rcbij").joinpath("data/battery.json").read_text()
    return json.loads(text)


def run_battery(entries=None, cap=DEFAULT_CAP, suites=None):
    reports = []
    for entry in default_battery() if entries is None else entries:
        spec = DynkinSpec(entry["type"], entry["rank"])
        shape = tuple(tuple(x) for x in entry["shape"])
        for name in entry["suites"]:
            if suites is None or name in suites:
                reports.append(run_suite(name, spec, shape, cap))
    return reports
