"""Generation of the folding-map families and the commutation check.

Each family is generated from its published base cases by the linear
recursion in the maps' coordinates; results are memoized per family, so a
fresh fold(tag, n) costs one recursion step beyond fold(tag, n-1).  The A2
family is generated natively in the ZW model (z and z-bar as independent
variables), which keeps the recursion free of conjugation bookkeeping; its
second coordinate is always swap_conjugate of the first.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .poly import XY, XY_VARS, ZW, ZW_VARS, Poly, PolyMap2, swap_conjugate, zw_to_xy

FAMILY_TAGS = ("a2", "b2", "g2")
HALF_FOLD_KINDS = ("b_sqrt2", "g_sqrt3")


def _p(terms: dict, vars=XY_VARS) -> Poly:
    return Poly(vars, terms)


def normalize_tag(tag: str) -> str:
    t = tag.lower().replace("_", "").replace("-", "")
    if t in ("a2", "b2", "g2"):
        return t
    raise ValueError(f"unknown folding family {tag!r}")


def normalize_half_kind(kind: str) -> str:
    t = kind.lower().replace("_", "").replace("-", "")
    if t in ("bsqrt2", "bsqrt"):
        return "b_sqrt2"
    if t in ("gsqrt3", "gsqrt"):
        return "g_sqrt3"
    raise ValueError(f"unknown half-fold kind {kind!r}")


@dataclass(frozen=True)
class FoldingFamily:
    tag: str
    model: str
    arity: int          # how many prior maps one recursion step consumes
    base_count: int

    def base_maps(self) -> list:
        """The published base cases, below which the recursion never runs."""
        return [fold(self.tag, n) for n in range(self.base_count)]


FAMILIES = {
    "a2": FoldingFamily("a2", ZW, 3, 3),
    "b2": FoldingFamily("b2", XY, 4, 4),
    "g2": FoldingFamily("g2", XY, 6, 6),
}


def get_family(tag: str) -> FoldingFamily:
    return FAMILIES[normalize_tag(tag)]

# -- base cases, verbatim from the published tables ------------------------

_Z = Poly.variable(ZW_VARS, "z")
_W = Poly.variable(ZW_VARS, "w")
_X = Poly.variable(XY_VARS, "x")
_Y = Poly.variable(XY_VARS, "y")

_A2_BASE = [
    Poly.constant(ZW_VARS, 3),
    _Z,
    _Z**2 - 2 * _W,
]

_B2_BASE = [
    (Poly.constant(XY_VARS, 4), Poly.constant(XY_VARS, 4)),
    (_X, _Y),
    (_p({(2, 0): 1, (0, 1): -2, (0, 0): -4}),
     _p({(0, 2): 1, (2, 0): -2, (0, 1): 4, (0, 0): 4})),
    (_p({(3, 0): 1, (1, 1): -3, (1, 0): -3}),
     _p({(0, 3): 1, (2, 1): -3, (0, 2): 6, (0, 1): 9})),
]

_G2_BASE = [
    (Poly.constant(XY_VARS, 6), Poly.constant(XY_VARS, 6)),
    (_X, _Y),
    (_p({(2, 0): 1, (1, 0): -2, (0, 1): -2, (0, 0): -6}),
     _p({(3, 0): -2, (1, 1): 6, (0, 2): 1, (1, 0): 18, (0, 1): 10, (0, 0): 18})),
    (_p({(3, 0): 1, (1, 1): -3, (1, 0): -9, (0, 1): -6, (0, 0): -12}),
     _p({(3, 1): -3, (3, 0): -6, (1, 2): 9, (0, 3): 1, (1, 1): 45,
         (0, 2): 18, (1, 0): 54, (0, 1): 63, (0, 0): 60})),
    (_p({(4, 0): 1, (2, 1): -4, (2, 0): -10, (1, 1): -4, (0, 2): 2,
         (1, 0): -8, (0, 1): 8, (0, 0): 6}),
     _p({(6, 0): 2, (4, 1): -12, (3, 2): -4, (4, 0): -36, (3, 1): -28,
         (2, 2): 18, (1, 3): 12, (0, 4): 1, (3, 0): -40, (2, 1): 108,
         (1, 2): 120, (0, 3): 24, (2, 0): 162, (1, 1): 372, (0, 2): 134,
         (1, 0): 360, (0, 1): 280, (0, 0): 198})),
    (_p({(5, 0): 1, (3, 1): -5, (3, 0): -15, (2, 1): -5, (1, 2): 5,
         (2, 0): -10, (1, 1): 35, (0, 2): 10, (1, 0): 55, (0, 1): 50,
         (0, 0): 60}),
     _p({(6, 1): 5, (6, 0): 10, (4, 2): -30, (3, 3): -5, (4, 1): -150,
         (3, 2): -65, (2, 3): 45, (1, 4): 15, (0, 5): 1, (4, 0): -180,
         (3, 1): -205, (2, 2): 360, (1, 3): 240, (0, 4): 30, (3, 0): -190,
         (2, 1): 945, (1, 2): 1200, (0, 3): 255, (2, 0): 810, (1, 1): 2415,
         (0, 2): 920, (1, 0): 1710, (0, 1): 1495, (0, 0): 900})),
]

# recursion multipliers for the G2 family
_G2_XM = _p({(1, 0): 1, (0, 1): 1, (0, 0): 3})                    # x + y + 3
_G2_XQ = _p({(2, 0): 1, (0, 1): -2, (0, 0): -4})                  # x^2 - 2y - 4
_G2_YM = _p({(3, 0): 1, (1, 1): -3, (1, 0): -9, (0, 1): -5, (0, 0): -9})
# The published constant term of this multiplier is 8, which fails the
# mandatory cross-check G_2 o G_3 = G_6; solving the recursion identity
# exactly forces 20 (= C(6,3), the value the factor must take at the
# fixed point x = y = 6 where all six orbit exponentials collapse to 1).
_G2_YQ = _p({(0, 2): 1, (3, 0): -2, (1, 1): 6, (1, 0): 18, (0, 1): 12, (0, 0): 20})
_B2_XM = _p({(0, 1): 1, (0, 0): 2})                               # 2 + y
_B2_YM = _p({(2, 0): 1, (0, 1): -2, (0, 0): -2})                  # x^2 - 2y - 2


def _a2_step(hist: list[Poly]) -> Poly:
    return _Z * hist[-1] - _W * hist[-2] + hist[-3]


def _b2_step(xs: list[Poly], ys: list[Poly]):
    xn = _X * (xs[-1] + xs[-3]) - _B2_XM * xs[-2] - xs[-4]
    yn = _Y * (ys[-1] + ys[-3]) - _B2_YM * ys[-2] - ys[-4]
    return xn, yn


def _g2_step(xs: list[Poly], ys: list[Poly]):
    xn = _X * (xs[-1] + xs[-5]) - _G2_XM * (xs[-2] + xs[-4]) + _G2_XQ * xs[-3] - xs[-6]
    yn = _Y * (ys[-1] + ys[-5]) - _G2_YM * (ys[-2] + ys[-4]) + _G2_YQ * ys[-3] - ys[-6]
    return xn, yn


class _Cache:
    """Per-family lists of component polynomials, populate-once."""

    def __init__(self):
        self.lock = threading.Lock()
        self.a2 = list(_A2_BASE)
        self.b2 = ([p for p, _ in _B2_BASE], [q for _, q in _B2_BASE])
        self.g2 = ([p for p, _ in _G2_BASE], [q for _, q in _G2_BASE])
        self.a2_xy: dict[int, PolyMap2] = {}

    def extend(self, tag: str, n: int):
        with self.lock:
            if tag == "a2":
                while len(self.a2) <= n:
                    self.a2.append(_a2_step(self.a2))
            elif tag == "b2":
                xs, ys = self.b2
                while len(xs) <= n:
                    xn, yn = _b2_step(xs, ys)
                    xs.append(xn)
                    ys.append(yn)
            else:
                xs, ys = self.g2
                while len(xs) <= n:
                    xn, yn = _g2_step(xs, ys)
                    xs.append(xn)
                    ys.append(yn)


_CACHE = _Cache()


def fold(tag: str, n: int) -> PolyMap2:
    """The n-th folding map of the family, in the family's native model."""
    tag = normalize_tag(tag)
    if n < 0:
        raise ValueError("fold needs n >= 0")
    label = f"{tag.upper()}:{n}"
    if tag == "a2":
        if len(_CACHE.a2) <= n:
            _CACHE.extend(tag, n)
        first = _CACHE.a2[n]
        return PolyMap2(first, swap_conjugate(first), ZW, label)
    xs, ys = _CACHE.b2 if tag == "b2" else _CACHE.g2
    if len(xs) <= n:
        _CACHE.extend(tag, n)
        xs, ys = _CACHE.b2 if tag == "b2" else _CACHE.g2
    return PolyMap2(xs[n], ys[n], XY, label)


def fold_xy(tag: str, n: int) -> PolyMap2:
    """The n-th folding map in xy-coordinates (converts A2 from ZW)."""
    tag = normalize_tag(tag)
    if tag != "a2":
        return fold(tag, n)
    with _CACHE.lock:
        got = _CACHE.a2_xy.get(n)
    if got is None:
        got = zw_to_xy(fold(tag, n))
        with _CACHE.lock:
            _CACHE.a2_xy.setdefault(n, got)
    return got


def half_fold(kind: str) -> PolyMap2:
    """The square-root folding maps B_sqrt2 and G_sqrt3."""
    kind = normalize_half_kind(kind)
    if kind == "b_sqrt2":
        return PolyMap2(_Y, _p({(2, 0): 1, (0, 1): -2, (0, 0): -4}), XY, "Bsqrt2")
    return PolyMap2(
        _Y,
        _p({(3, 0): 1, (1, 1): -3, (1, 0): -9, (0, 1): -6, (0, 0): -12}),
        XY,
        "Gsqrt3",
    )


def compose(outer: PolyMap2, inner: PolyMap2) -> PolyMap2:
    """Exact composition outer(inner(.)); both maps must share a model."""
    if outer.model != inner.model:
        raise ValueError(
            f"cannot compose maps in different models ({outer.model}, {inner.model})"
        )
    u, v = outer.first.vars
    images = {u: inner.first, v: inner.second}
    return PolyMap2(
        outer.first.substitute(images),
        outer.second.substitute(images),
        outer.model,
        f"{outer.label}.{inner.label}",
    )


def first_difference(a: PolyMap2, b: PolyMap2):
    """First differing coefficient in canonical order, or None if equal.

    Returns (component, exponents, coefficient_a, coefficient_b).
    """
    for idx, (pa, pb) in enumerate(zip(a.components(), b.components()), start=1):
        diff = pa - pb
        if not diff.is_zero():
            exps, _ = diff.leading_term()
            return (idx, exps, pa.coeff(exps), pb.coeff(exps))
    return None


@dataclass
class CommuteReport:
    family: str
    m: int
    n: int
    left_ok: bool                  # F_m o F_n == F_{mn}
    right_ok: bool                 # F_n o F_m == F_{mn}
    left_witness: tuple | None = None
    right_witness: tuple | None = None

    @property
    def passed(self) -> bool:
        return self.left_ok and self.right_ok


def verify_commute(tag: str, m: int, n: int) -> CommuteReport:
    """Check F_m o F_n = F_{mn} = F_n o F_m exactly."""
    tag = normalize_tag(tag)
    fm, fn, fmn = fold(tag, m), fold(tag, n), fold(tag, m * n)
    left = compose(fm, fn)
    right = compose(fn, fm)
    lw = first_difference(left, fmn)
    rw = first_difference(right, fmn)
    return CommuteReport(tag, m, n, lw is None, rw is None, lw, rw)
