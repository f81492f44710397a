"""JSON encoding of tableaux, paths and rigged configurations.

Letters are signed integers (-k is the barred letter k).  Spin factors are
written with their rendered letter columns and "spin": true.
"""

from .crystal_tableaux import KRTableau, Path, check_letter, is_spin_shape, signs_from_letters
from .rigged_config import RiggedConfiguration
from .root_data import DynkinSpec


class WireError(ValueError):
    pass


def spec_from_json(data):
    try:
        return DynkinSpec(data["type"], int(data["n"]))
    except KeyError as err:
        raise WireError(f"missing field {err}") from None


def tableau_to_json(t):
    return {"r": t.r, "s": t.s, "cols": [list(c) for c in t.letter_columns()], "spin": t.spin}


def tableau_from_json(spec, data):
    try:
        r, s, cols = int(data["r"]), int(data["s"]), data["cols"]
    except (KeyError, TypeError) as err:
        raise WireError(f"bad tableau {data!r}: {err}") from None
    spec.check_node(r)
    if len(cols) != s or any(len(c) != r for c in cols):
        raise WireError(f"tableau columns do not form a {r}x{s} rectangle")
    spin = is_spin_shape(spec, r)
    if bool(data.get("spin", spin)) != spin:
        raise WireError(f"spin flag must be {spin} for B^{{{r},{s}}} of {spec}")
    if spin:
        return KRTableau(r, s, tuple(signs_from_letters(c, spec.rank) for c in cols), True)
    for c in cols:
        for x in c:
            check_letter(spec, x)
    return KRTableau(r, s, tuple(tuple(int(x) for x in c) for c in cols))


def path_to_json(p):
    return {"type": p.spec.family, "n": p.spec.rank, "factors": [tableau_to_json(t) for t in p.factors]}


def path_from_json(data, spec=None):
    spec = spec or spec_from_json(data)
    return Path(spec, tuple(tableau_from_json(spec, t) for t in data.get("factors", [])))


def rc_to_json(rc):
    return {
        "type": rc.spec.family,
        "n": rc.spec.rank,
        "shape": [list(x) for x in rc.shape],
        "nu": [[list(row) for row in rc.rows(a)] for a in rc.spec.nodes],
    }


def rc_from_json(data, spec=None):
    spec = spec or spec_from_json(data)
    try:
        shape = tuple((int(r), int(s)) for r, s in data["shape"])
        nu = data.get("nu") or [[] for _ in spec.nodes]
        nu = tuple(tuple((int(l), int(x)) for l, x in part) for part in nu)
    except (KeyError, TypeError, ValueError) as err:
        raise WireError(f"bad rigged configuration: {err}") from None
    return RiggedConfiguration(spec, shape, nu)


def letter_text(x):
    return f"{-x}b" if x < 0 else str(x)


def tableau_text(t):
    return "/".join(",".join(letter_text(x) for x in row) for row in t.rows())


def path_text(p):
    return " (x) ".join(f"[{tableau_text(t)}]" for t in p.factors)


def rc_text(rc):
    lines = [f"{rc.spec} shape " + " (x) ".join(f"B^{r},{s}" for r, s in rc.shape)]
    for a in rc.spec.nodes:
        rows = " ".join(f"({l},{x})" for l, x in rc.rows(a))
        lines.append(f"  nu^{a}: {rows or '-'}")
    return "\n".join(lines)
