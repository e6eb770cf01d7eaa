"""Independent numerical oracle for the folding maps.

The folding map of index n is characterized by Phi(n p) = F_n(Phi(p)),
where Phi = (phi_1, phi_2) sums unit exponentials over the two fundamental
weight orbits of the family's Weyl group.  Everything is set up in weight
coordinates: weights are integer vectors, the Weyl group acts by integer
2x2 matrices, the dual torus lattice is Z^2, so a torus point is just a
pair of real numbers and phi_k is a finite sum of exp(2*pi*i <weight,
point>) terms.

The only free choice left by that construction is which orbit sum plays
which coordinate of the plane; calibrate() fixes it empirically by testing
both orderings of Phi against the family's explicit quadratic map, which is
also the end-to-end validation of the root data.  The orbit sums (rather
than full Weyl-group sums) are forced by the constant maps F_0: the orbit
sizes (3,3) / (4,4) / (6,6) match them, |W|-fold sums would not.

The module also carries the symbolic Chebyshev oracle: the B-family map of
index n satisfies F_n(u+v, uv) = (T_n(u)+T_n(v), T_n(u)T_n(v)) with the
normalized Chebyshev polynomials T_0 = 2, T_1 = t, T_{k+1} = t T_k -
T_{k-1}; that identity is checked as an exact polynomial equality.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .folding import fold, normalize_tag
from .poly import Poly

CARTAN = {
    "a2": ((2, -1), (-1, 2)),
    "b2": ((2, -1), (-2, 2)),
    "g2": ((2, -1), (-3, 2)),
}

WEYL_ORDER = {"a2": 6, "b2": 8, "g2": 12}

TWO_PI = 2.0 * math.pi


def _mat_mul(m, n):
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def _mat_vec(m, v):
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def _mat_inv_transpose(m):
    """(M^T)^-1 for an integer matrix with det +-1 (the dual torus action)."""
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if det not in (1, -1):
        raise ValueError("Weyl matrix must have determinant +-1")
    inv = ((m[1][1] * det, -m[0][1] * det), (-m[1][0] * det, m[0][0] * det))
    return ((inv[0][0], inv[1][0]), (inv[0][1], inv[1][1]))


@dataclass(frozen=True)
class RootSystemData:
    tag: str
    cartan: tuple
    simple_roots_plane: tuple           # explicit planar realization (floats)
    weyl: tuple                         # all group elements, weight basis
    orbits: tuple                       # (orbit of w1, orbit of w2)
    lattice_generators: tuple = ((1, 0), (0, 1))

    @property
    def orbit_sizes(self):
        return (len(self.orbits[0]), len(self.orbits[1]))


def _simple_reflections(cartan):
    """s_j in the fundamental-weight basis: s_j(w_i) = w_i - delta_ij alpha_j,
    with alpha_j = sum_i cartan[i][j] w_i."""
    out = []
    for j in range(2):
        cols = []
        for c in range(2):
            col = [1 if r == c else 0 for r in range(2)]
            if c == j:
                col = [col[r] - cartan[r][j] for r in range(2)]
            cols.append(col)
        out.append(((cols[0][0], cols[1][0]), (cols[0][1], cols[1][1])))
    return out


def _closure(generators):
    identity = ((1, 0), (0, 1))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for m in frontier:
            for g in generators:
                prod = _mat_mul(g, m)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return tuple(sorted(seen))


def _orbit(weyl, start):
    return tuple(sorted({_mat_vec(m, start) for m in weyl}))


def _planar_roots(cartan):
    """A planar realization matching the Cartan matrix, alpha_1 on the axis.

    With the convention cartan[i][j] = 2 (alpha_j, alpha_i) / (alpha_i,
    alpha_i) and (alpha_1, alpha_1) = 2 fixed, the remaining inner products
    are determined.
    """
    ip12 = float(cartan[0][1])                    # (alpha_1, alpha_2)
    len2sq = 2.0 * ip12 / float(cartan[1][0])     # (alpha_2, alpha_2)
    a1 = (math.sqrt(2.0), 0.0)
    x = ip12 / a1[0]
    y = math.sqrt(len2sq - x * x)
    return (a1, (x, y))


def root_system(tag: str) -> RootSystemData:
    tag = normalize_tag(tag)
    cartan = CARTAN[tag]
    weyl = _closure(_simple_reflections(cartan))
    if len(weyl) != WEYL_ORDER[tag]:
        raise ValueError(
            f"Weyl closure for {tag} has order {len(weyl)}, "
            f"expected {WEYL_ORDER[tag]}"
        )
    orbits = (_orbit(weyl, (1, 0)), _orbit(weyl, (0, 1)))
    return RootSystemData(tag, cartan, _planar_roots(cartan), weyl, orbits)


_SYSTEMS: dict[str, RootSystemData] = {}


def get_system(tag: str) -> RootSystemData:
    tag = normalize_tag(tag)
    if tag not in _SYSTEMS:
        _SYSTEMS[tag] = root_system(tag)
    return _SYSTEMS[tag]


# -- the exponential-invariant map ------------------------------------------


def orbit_sum(orbit, point) -> complex:
    return sum(
        cmath.exp(1j * TWO_PI * (lam[0] * point[0] + lam[1] * point[1]))
        for lam in orbit
    )


def phi(data: RootSystemData, point, ordering=(0, 1)):
    """(phi_1, phi_2) at a torus point, under the calibrated orbit ordering."""
    return (
        orbit_sum(data.orbits[ordering[0]], point),
        orbit_sum(data.orbits[ordering[1]], point),
    )


def reduce_point(point):
    return (point[0] % 1.0, point[1] % 1.0)


def scale_point(point, n: int):
    return (n * point[0], n * point[1])


def dual_action(matrix, point):
    """Action of a Weyl element on the torus (contragredient on L_0)."""
    m = _mat_inv_transpose(matrix)
    return (
        m[0][0] * point[0] + m[0][1] * point[1],
        m[1][0] * point[0] + m[1][1] * point[1],
    )


class CalibrationError(RuntimeError):
    pass


@dataclass
class Calibration:
    tag: str
    ordering: tuple
    max_residual: float


_CALIBRATIONS: dict[str, Calibration] = {}


def calibrate(tag: str, points: int = 24, tol: float = 1e-9) -> Calibration:
    """Fix which orbit sum feeds which plane coordinate.

    Tests Phi(2p) = F_2(Phi(p)) for both orderings on random sample points;
    exactly one ordering can match, and a match validates the root data
    end to end.  The result is cached per family.
    """
    tag = normalize_tag(tag)
    cached = _CALIBRATIONS.get(tag)
    if cached is not None:
        return cached
    data = get_system(tag)
    f2 = fold(tag, 2)
    rng = random.Random(0xC0FFEE)
    sample = [(rng.random(), rng.random()) for _ in range(points)]
    match = None
    for ordering in ((0, 1), (1, 0)):
        worst = 0.0
        for p in sample:
            image = phi(data, p, ordering)
            doubled = phi(data, scale_point(p, 2), ordering)
            mapped = f2.evaluate_complex(image)
            worst = max(
                worst,
                abs(doubled[0] - mapped[0]),
                abs(doubled[1] - mapped[1]),
            )
        if worst < tol:
            match = Calibration(tag, ordering, worst)
            break
    if match is None:
        raise CalibrationError(f"neither orbit ordering matches F_2 for {tag}")
    _CALIBRATIONS[tag] = match
    return match


@dataclass
class ScalingReport:
    family: str
    n: int
    trials: int
    tol: float
    seed: int
    max_residual: float = 0.0

    @property
    def passed(self) -> bool:
        return self.max_residual < self.tol


def check_scaling(tag: str, n: int, trials: int = 100, tol: float = 1e-7,
                  seed: int = 0) -> ScalingReport:
    """Max residual of Phi(n p) - F_n(Phi(p)) over seeded random points."""
    tag = normalize_tag(tag)
    cal = calibrate(tag)
    data = get_system(tag)
    fmap = fold(tag, n)
    rng = random.Random(seed)
    report = ScalingReport(tag, n, trials, tol, seed)
    for _ in range(trials):
        p = (rng.random(), rng.random())
        image = phi(data, p, cal.ordering)
        scaled = phi(data, scale_point(p, n), cal.ordering)
        mapped = fmap.evaluate_complex(image)
        report.max_residual = max(
            report.max_residual,
            abs(scaled[0] - mapped[0]),
            abs(scaled[1] - mapped[1]),
        )
    return report


# -- the symbolic Chebyshev oracle for the B family ---------------------------


def chebyshev(n: int) -> Poly:
    """Normalized Chebyshev polynomial: T_n(t + 1/t) = t^n + t^-n."""
    if n < 0:
        raise ValueError("chebyshev needs n >= 0")
    t = Poly.variable(("t",), "t")
    prev, cur = Poly.constant(("t",), 2), t
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, t * cur - prev
    return cur


def _embed_univariate(p: Poly, vars, position: int) -> Poly:
    terms = {}
    for (k,), coef in p.terms.items():
        exps = [0] * len(vars)
        exps[position] = k
        terms[tuple(exps)] = coef
    return Poly(vars, terms, _internal=True)


@dataclass
class FunctionalReport:
    n: int
    passed: bool
    witness: tuple | None = None


def verify_B_functional(n: int) -> FunctionalReport:
    """Exact check of F_n(u+v, uv) = (T_n(u)+T_n(v), T_n(u) T_n(v))."""
    uv = ("u", "v")
    u = Poly.variable(uv, "u")
    v = Poly.variable(uv, "v")
    fmap = fold("b2", n)
    xvar, yvar = fmap.first.vars
    images = {xvar: u + v, yvar: u * v}
    lhs = (fmap.first.substitute(images), fmap.second.substitute(images))
    tn = chebyshev(n)
    tu = _embed_univariate(tn, uv, 0)
    tv = _embed_univariate(tn, uv, 1)
    rhs = (tu + tv, tu * tv)
    for component, (left, right) in enumerate(zip(lhs, rhs), start=1):
        diff = left - right
        if not diff.is_zero():
            exps, coef = diff.leading_term()
            return FunctionalReport(n, False, (component, exps, coef))
    return FunctionalReport(n, True)
