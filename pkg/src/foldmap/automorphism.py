"""Affine automorphisms of the folding maps.

is_member checks phi o F = F o phi exactly; claimed_group builds the
published solution sets; solve_aut recovers them from scratch with a guided
constraint-elimination engine that mechanizes the coefficient ladders of the
published proofs.

The engine works on the commutator D = phi o F - F o phi, expanded in an
eight-variable ring (the two plane variables plus six unknown affine
coefficients).  Each plane monomial's coefficient is one constraint
polynomial in the six unknowns.  Constraints are consumed in a per-family
priority order mirroring the proofs, under four rewrite rules:

  R1  a monomial constraint branches on its variables vanishing;
  R2  a constraint linear in one unknown whose leading coefficient is a unit
      (a nonzero constant, possibly times a monomial in unknowns already
      known to be roots of unity) substitutes that unknown;
  R3  a constraint v^k = rho with rho a root of unity records
      order(v) | k*order(rho); records intersect by gcd;
  R4  a constraint with monomial content branches on content vs cofactor.

Order records justify two sound normalizations used throughout: exponents
of recorded unknowns are reduced mod the recorded order, and recorded-unit
monomial factors are cancelled.  When no rule applies, a recorded unknown
with order dividing 12 is enumerated over the exact roots of unity in
Q(zeta_12); a stall with any other order is reported as unresolved rather
than guessed at.  Every concrete branch solution is certified against the
original constraint system before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .cyclo import (
    CycloElem,
    coef_components,
    coef_div,
    roots_of_unity,
    unity_order,
)
from .folding import compose, fold, normalize_tag
from .poly import XY, ZW, Poly, PolyMap2, grlex_key
from .rationals import rat, rat_str

UNKNOWNS = ("a", "b", "c", "d", "e", "f")


class AffineMap2:
    """(x, y) -> (ax + by + c, dx + ey + f), entries in Q(zeta_12).

    In the ZW model the same six slots read (z, w) -> (az + bw + c,
    dz + ew + f) with all six entries independent.
    """

    __slots__ = ("coeffs", "model")

    def __init__(self, coeffs, model: str):
        if len(coeffs) != 6:
            raise ValueError("an affine plane map needs six coefficients")
        self.coeffs = tuple(coeffs)
        self.model = model

    @classmethod
    def identity(cls, model: str) -> "AffineMap2":
        return cls((1, 0, 0, 0, 1, 0), model)

    def det(self):
        a, b, _, d, e, _ = self.coeffs
        return a * e - b * d

    def is_invertible(self) -> bool:
        return bool(CycloElem.from_coef(self.det()))

    def as_polymap(self, vars) -> PolyMap2:
        a, b, c, d, e, f = self.coeffs
        first = Poly(vars, {(1, 0): a, (0, 1): b, (0, 0): c})
        second = Poly(vars, {(1, 0): d, (0, 1): e, (0, 0): f})
        return PolyMap2(first, second, self.model, "affine")

    def compose(self, inner: "AffineMap2") -> "AffineMap2":
        if self.model != inner.model:
            raise ValueError("cannot compose affine maps in different models")
        a1, b1, c1, d1, e1, f1 = self.coeffs
        a2, b2, c2, d2, e2, f2 = inner.coeffs
        return AffineMap2(
            (
                a1 * a2 + b1 * d2,
                a1 * b2 + b1 * e2,
                a1 * c2 + b1 * f2 + c1,
                d1 * a2 + e1 * d2,
                d1 * b2 + e1 * e2,
                d1 * c2 + e1 * f2 + f1,
            ),
            self.model,
        )

    def apply_point(self, point):
        a, b, c, d, e, f = self.coeffs
        px, py = point
        return (a * px + b * py + c, d * px + e * py + f)

    def sort_key(self):
        return tuple(tuple(rat(x) for x in coef_components(c)) for c in self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, AffineMap2):
            return NotImplemented
        return self.model == other.model and all(
            CycloElem.from_coef(p) == CycloElem.from_coef(q)
            for p, q in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.model, tuple(coef_components(c) for c in self.coeffs)))

    def to_json_obj(self) -> dict:
        return {
            "model": self.model,
            "coeffs": [[rat_str(x) for x in coef_components(c)] for c in self.coeffs],
        }

    def zw_to_xy(self) -> "AffineMap2":
        """Change of basis z = x + iy for a ZW map preserving the real locus.

        Requires (d, e, f) = (conj b, conj a, conj c), i.e. the second
        component is the conjugate of the first under the variable swap.
        """
        if self.model != ZW:
            raise ValueError("zw_to_xy needs a ZW-model affine map")
        a, b, c, d, e, f = (CycloElem.from_coef(v) for v in self.coeffs)
        if (d, e, f) != (b.conj(), a.conj(), c.conj()):
            raise ValueError("affine map does not preserve the real locus")
        half = CycloElem(rat(1, 2))
        i_unit = CycloElem.zeta_pow(3)

        def re(q):
            return (q + q.conj()) * half

        def im(q):
            return (q - q.conj()) * half * (-i_unit)

        return AffineMap2(
            (
                re(a + b),
                re(i_unit * (a - b)),
                re(c),
                im(a + b),
                im(i_unit * (a - b)),
                im(c),
            ),
            XY,
        )

    def __repr__(self):
        return f"AffineMap2[{self.model}]{self.coeffs!r}"


def is_member(phi: AffineMap2, fmap: PolyMap2) -> bool:
    """True iff phi o F = F o phi exactly; phi must be invertible."""
    if not phi.is_invertible():
        raise ValueError("is_member needs an invertible affine map")
    if phi.model != fmap.model:
        raise ValueError("model mismatch between map and candidate")
    pm = phi.as_polymap(fmap.first.vars)
    return compose(pm, fmap) == compose(fmap, pm)


@dataclass
class SolutionSet:
    elements: list
    label: str
    table: list
    note: str = ""

    @property
    def order(self) -> int:
        return len(self.elements)

    def to_json_obj(self) -> dict:
        return {
            "order": self.order,
            "label": self.label,
            "elements": [m.to_json_obj() for m in self.elements],
            "table": self.table,
            "note": self.note,
        }


def _group_structure(elements: list) -> tuple[list, str]:
    """Multiplication table (as index rows) and abstract label."""
    n = len(elements)
    table = []
    for p in elements:
        row = []
        for q in elements:
            prod = p.compose(q)
            idx = next((k for k, r in enumerate(elements) if r == prod), None)
            if idx is None:
                raise ValueError("solution set is not closed under composition")
            row.append(idx)
        table.append(row)
    abelian = all(
        table[i][j] == table[j][i] for i in range(n) for j in range(n)
    )
    if n == 1:
        label = "trivial"
    elif n == 2:
        label = "mu2"
    elif n == 6 and not abelian:
        label = "S3"
    else:
        label = f"order{n}"
    return table, label


_B2_TYPO_NOTE = (
    "group pattern follows the odd/even automorphism theorem for the B "
    "family; the survey table's B2 line prints degenerate congruences "
    "(mod 1 / mod 0) and is treated as a typo"
)


def claimed_group(tag: str, n: int) -> SolutionSet:
    """The published automorphism group, as exact affine maps."""
    tag = normalize_tag(tag)
    if n < 2:
        raise ValueError("automorphism groups are stated for n >= 2")
    if tag == "a2":
        zetas = roots_of_unity(3) if n % 3 == 1 else [CycloElem(1)]
        elements = []
        for z in zetas:
            z2 = z * z
            elements.append(AffineMap2((z, 0, 0, 0, z2, 0), ZW))
            elements.append(AffineMap2((0, z, 0, z2, 0, 0), ZW))
        note = ""
    elif tag == "b2":
        elements = [AffineMap2.identity(XY)]
        if n % 2 == 1:
            elements.append(AffineMap2((-1, 0, 0, 0, 1, 0), XY))
        note = _B2_TYPO_NOTE
    else:
        elements = [AffineMap2.identity(XY)]
        note = ""
    elements.sort(key=lambda m: m.sort_key())
    table, label = _group_structure(elements)
    return SolutionSet(elements, label, table, note)


# -- the elimination engine --------------------------------------------------


@dataclass
class ConstraintState:
    """One branch of the elimination search."""

    constraints: list          # list of (key, Poly over UNKNOWNS)
    subs: dict                 # unknown -> Poly (current image)
    records: dict              # unknown -> g with unknown^g = 1 known
    depth: int = 0


@dataclass
class SolveOutcome:
    family: str
    n: int
    solutions: SolutionSet
    unresolved: list = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.unresolved


def _lift(p: Poly, ring) -> Poly:
    pad = (0,) * (len(ring) - len(p.vars))
    return Poly(ring, {e + pad: c for e, c in p.terms.items()}, _internal=True)


def collect_constraints(fmap: PolyMap2) -> dict:
    """Expand phi o F - F o phi and bucket by plane monomial.

    Returns a dict (component, plane_exps) -> Poly in the six unknowns.
    """
    plane = fmap.first.vars
    ring = plane + UNKNOWNS
    uvar = {v: Poly.variable(ring, v) for v in UNKNOWNS}
    xv = Poly.variable(ring, plane[0])
    yv = Poly.variable(ring, plane[1])
    img1 = uvar["a"] * xv + uvar["b"] * yv + uvar["c"]
    img2 = uvar["d"] * xv + uvar["e"] * yv + uvar["f"]
    lifted1 = _lift(fmap.first, ring)
    lifted2 = _lift(fmap.second, ring)
    images = {plane[0]: img1, plane[1]: img2}
    d1 = uvar["a"] * lifted1 + uvar["b"] * lifted2 + uvar["c"] - fmap.first.substitute(images)
    d2 = uvar["d"] * lifted1 + uvar["e"] * lifted2 + uvar["f"] - fmap.second.substitute(images)
    buckets = {}
    for component, dpoly in ((1, d1), (2, d2)):
        for exps, coef in dpoly.terms.items():
            key = (component, exps[:2])
            buckets.setdefault(key, {})[exps[2:]] = coef
    return {key: Poly(UNKNOWNS, terms, _internal=True) for key, terms in buckets.items()}


def _priority_list(tag: str, n: int):
    """Plane monomials to consume first, mirroring the published ladders."""
    if tag == "b2":
        keys = [
            (1, (1, n - 1)),
            (1, (2, n - 2)),
            (1, (n, 0)),
            (1, (n - 1, 0)),
            (1, (n - 2, 1)),
            (1, (n - 3, 1)),
            (1, (n - 2, 0)),
            (2, (2, n - 2)),
        ]
    elif tag == "a2":
        keys = [(1, (n, 0)), (1, (0, n))]
        keys += [(1, (i, n - i)) for i in range(n - 1, 0, -1)]
        keys += [(1, (n - 1, 0)), (1, (n - 2, 1))]
        keys += [(2, (0, n)), (2, (n, 0))]
        keys += [(2, (i, n - i)) for i in range(1, n)]
        keys += [(2, (0, n - 1)), (2, (1, n - 2))]
    else:
        if n % 2 == 0:
            top = (3 * n // 2, 0)
            tail = [(2, (3 * n // 2, 0))]
        else:
            k = (n - 1) // 2
            top = (3 * k, 1)
            tail = [(2, (3 * k + 1, 0)), (2, (3 * k, 1))]
        keys = [
            (1, top),
            (1, (n, 0)),
            (1, (n - 1, 0)),
            (1, (n - 2, 1)),
            (1, (n - 3, 1)),
            (1, (n - 2, 0)),
        ] + tail
    seen = set()
    out = []
    for key in keys:
        if min(key[1]) < 0 or key in seen:
            continue
        seen.add(key)
        out.append(key)
    return out


def _order_keys(all_keys, priority):
    rank = {key: i for i, key in enumerate(priority)}
    big = len(priority)

    def sort_key(key):
        component, exps = key
        return (rank.get(key, big), component, -sum(exps), tuple(-e for e in exps))

    return sorted(all_keys, key=sort_key)


_IDENTITY_IMAGES = {v: Poly.variable(UNKNOWNS, v) for v in UNKNOWNS}


def _apply_subs(p: Poly, subs: dict) -> Poly:
    if not subs or p.is_zero():
        return p
    images = dict(_IDENTITY_IMAGES)
    images.update(subs)
    return p.substitute(images)


def _reduce_exponents(p: Poly, records: dict) -> Poly:
    """Reduce exponents of recorded unknowns mod their order (v^g = 1)."""
    if p.is_zero() or not records:
        return p
    rec = [(UNKNOWNS.index(v), g) for v, g in records.items()]
    if not any(e[k] >= g for e in p.terms for k, g in rec):
        return p
    terms = {}
    for exps, coef in p.terms.items():
        le = list(exps)
        for k, g in rec:
            if le[k] >= g:
                le[k] %= g
        key = tuple(le)
        acc = terms.get(key)
        terms[key] = coef if acc is None else acc + coef
    return Poly(UNKNOWNS, {e: c for e, c in terms.items() if c}, _internal=True)


def _normalize(p: Poly, records: dict) -> Poly:
    """Exponent reduction, unit-content cancellation, monic scaling."""
    p = _reduce_exponents(p, records)
    if p.is_zero():
        return p
    if records:
        mins = None
        for exps in p.terms:
            mins = list(exps) if mins is None else [min(m, e) for m, e in zip(mins, exps)]
        shift = [0] * len(UNKNOWNS)
        for v in records:
            k = UNKNOWNS.index(v)
            shift[k] = mins[k]
        if any(shift):
            p = Poly(
                UNKNOWNS,
                {tuple(e - s for e, s in zip(exps, shift)): c for exps, c in p.terms.items()},
                _internal=True,
            )
    _, lead = p.leading_term()
    if lead != 1:
        p = p.map_coefficients(lambda co: coef_div(co, lead))
    return p


def _linear_split(p: Poly, var_index: int):
    """(L, R) with p = L*v + R when p is linear in v; None otherwise."""
    lin, rest = {}, {}
    for exps, coef in p.terms.items():
        ev = exps[var_index]
        if ev == 0:
            rest[exps] = coef
        elif ev == 1:
            reduced = list(exps)
            reduced[var_index] = 0
            lin[tuple(reduced)] = coef
        else:
            return None
    if not lin:
        return None
    return (
        Poly(UNKNOWNS, lin, _internal=True),
        Poly(UNKNOWNS, rest, _internal=True),
    )


def _unit_monomial_inverse(exps, coef, records: dict):
    """Inverse of coef * prod(v^e) when every v with e > 0 carries a record."""
    inv = Poly.constant(UNKNOWNS, coef_div(1, coef))
    for v, e in zip(UNKNOWNS, exps):
        if e == 0:
            continue
        g = records.get(v)
        if g is None:
            return None
        back = (-e) % g
        if back:
            mono = [0] * len(UNKNOWNS)
            mono[UNKNOWNS.index(v)] = back
            inv = inv * Poly(UNKNOWNS, {tuple(mono): 1}, _internal=True)
    return inv


def _as_power_equation(p: Poly):
    """Match a monic p == v^k - rhs with rhs constant; returns (v, k, rhs)."""
    if len(p.terms) != 2:
        return None
    items = sorted(p.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)
    (top_exps, top_coef), (low_exps, low_coef) = items
    if top_coef != 1 or sum(low_exps) != 0:
        return None
    support = [k for k, e in enumerate(top_exps) if e > 0]
    if len(support) != 1:
        return None
    return (UNKNOWNS[support[0]], top_exps[support[0]], -low_coef)


class _Engine:
    def __init__(self, fmap: PolyMap2, priority, depth_cap: int):
        self.original = collect_constraints(fmap)
        self.keys = _order_keys(self.original.keys(), priority)
        self.depth_cap = depth_cap
        self.model = fmap.model
        self.solutions = []
        self.unresolved = []
        self._synthetic = 0

    def initial_state(self) -> ConstraintState:
        return ConstraintState(
            constraints=[(key, self.original[key]) for key in self.keys],
            subs={},
            records={},
        )

    def run(self):
        stack = [self.initial_state()]
        while stack:
            outcome = self._process(stack.pop())
            if outcome is None:
                continue
            kind, payload = outcome
            if kind == "solution":
                if payload not in self.solutions:
                    self.solutions.append(payload)
            elif kind == "branch":
                stack.extend(payload)
            else:
                self.unresolved.append(payload)

    # -- state transforms ---------------------------------------------------

    def _with_sub(self, state: ConstraintState, var: str, image: Poly) -> ConstraintState:
        one = {var: image}
        subs = {u: _apply_subs(p, one) for u, p in state.subs.items()}
        subs[var] = image
        records = dict(state.records)
        constraints = list(state.constraints)
        if var in records:
            g = records.pop(var)
            # the record var^g = 1 must survive the substitution
            self._synthetic += 1
            constraints.append(
                ((0, ("record", var, self._synthetic)), image**g - 1)
            )
        return ConstraintState(constraints, subs, records, state.depth)

    def _det_poly(self, subs: dict) -> Poly:
        def img(v):
            return subs.get(v) or Poly.variable(UNKNOWNS, v)

        return img("a") * img("e") - img("b") * img("d")

    # -- main rewrite loop ----------------------------------------------------

    def _process(self, state: ConstraintState):
        while True:
            live = []
            seen = set()
            for key, p in state.constraints:
                q = _apply_subs(p, state.subs)
                if q.is_zero():
                    continue
                q = _normalize(q, state.records)
                if q.is_zero():
                    continue
                if q.is_constant():
                    return None  # nonzero constant: inconsistent branch
                sig = tuple(sorted(q.terms.items(), key=lambda t: grlex_key(t[0])))
                if sig in seen:
                    continue
                seen.add(sig)
                live.append((key, q))
            state.constraints = live
            if self._det_poly(state.subs).is_zero():
                return None  # determinant forced to vanish identically
            action = self._find_action(state)
            if action is None:
                return self._finish(state)
            kind = action[0]
            if kind == "sub":
                state = self._with_sub(state, action[1], action[2])
            elif kind == "drop":
                state.constraints = [
                    (k, p) for k, p in state.constraints if k != action[1]
                ]
            elif kind == "record":
                _, var, order, drop_key = action
                g = gcd(state.records.get(var, 0), order)
                if drop_key is not None:
                    state.constraints = [
                        (k, p) for k, p in state.constraints if k != drop_key
                    ]
                if g == 1:
                    state.records.pop(var, None)
                    state = self._with_sub(state, var, Poly.constant(UNKNOWNS, 1))
                else:
                    state.records[var] = g
            elif kind == "branch":
                if state.depth + 1 > self.depth_cap:
                    return (
                        "unresolved",
                        {"reason": "branch depth cap exceeded", "state": _digest(state)},
                    )
                children = []
                for br in action[1]:
                    child = ConstraintState(
                        list(state.constraints),
                        dict(state.subs),
                        dict(state.records),
                        state.depth + 1,
                    )
                    if br[0] == "set":
                        child = self._with_sub(child, br[1], br[2])
                    else:  # ("factor", key, cofactor)
                        child.constraints = [
                            (k, (br[2] if k == br[1] else p))
                            for k, p in child.constraints
                        ]
                    children.append(child)
                return ("branch", children)
            else:
                return ("unresolved", action[1])

    def _find_action(self, state: ConstraintState):
        records = state.records
        for key, p in state.constraints:
            # R3: v^k = root of unity
            shaped = _as_power_equation(p)
            if shaped is not None:
                var, k, rhs = shaped
                rho_order = unity_order(rhs)
                if rho_order is not None:
                    old = records.get(var, 0)
                    order = k * rho_order
                    if rho_order == 1:
                        # the record captures the constraint completely
                        return ("record", var, order, key)
                    if old == 0 or gcd(old, order) != old:
                        # v^k = rho only implies v^(k*ord(rho)) = 1: sharpen
                        # the record but keep the constraint for enumeration
                        return ("record", var, order, None)
            # R2 / R2': substitute the latest linearly-occurring unknown
            for vi in range(len(UNKNOWNS) - 1, -1, -1):
                split = _linear_split(p, vi)
                if split is None:
                    continue
                lead, rest = split
                if lead.is_constant():
                    image = rest.map_coefficients(
                        lambda co: coef_div(co, -lead.constant_value())
                    )
                    return ("sub", UNKNOWNS[vi], _reduce_exponents(image, records))
                if len(lead.terms) == 1:
                    (exps, coef), = lead.terms.items()
                    inv = _unit_monomial_inverse(exps, coef, records)
                    if inv is not None:
                        image = _reduce_exponents(-(rest * inv), records)
                        return ("sub", UNKNOWNS[vi], image)
            # R1: single monomial
            if len(p.terms) == 1:
                (exps, _), = p.terms.items()
                branches = [
                    ("set", v, Poly.zero(UNKNOWNS))
                    for v, e in zip(UNKNOWNS, exps)
                    if e > 0 and v not in records
                ]
                if not branches:
                    return None  # unit monomial cannot vanish: dead end
                return ("branch", branches)
            # R4: strip monomial content
            mins = None
            for exps in p.terms:
                mins = list(exps) if mins is None else [min(m, e) for m, e in zip(mins, exps)]
            if any(mins):
                cofactor = Poly(
                    UNKNOWNS,
                    {tuple(e - m for e, m in zip(exps, mins)): c for exps, c in p.terms.items()},
                    _internal=True,
                )
                branches = [
                    ("set", v, Poly.zero(UNKNOWNS))
                    for v, m in zip(UNKNOWNS, mins)
                    if m > 0 and v not in records
                ]
                branches.append(("factor", key, cofactor))
                return ("branch", branches)
        # quiescent: enumerate a recorded unknown
        for v in UNKNOWNS:
            g = records.get(v)
            if g is None:
                continue
            if 12 % g != 0:
                return (
                    "unresolved",
                    {
                        "reason": f"order record {v}^{g} = 1 not realizable in Q(zeta_12)",
                        "state": _digest(state),
                    },
                )
            return (
                "branch",
                [("set", v, Poly.constant(UNKNOWNS, root)) for root in roots_of_unity(g)],
            )
        return None

    def _finish(self, state: ConstraintState):
        if state.constraints:
            return (
                "unresolved",
                {"reason": "no rewrite rule applies", "state": _digest(state)},
            )
        values = {}
        for v in UNKNOWNS:
            img = state.subs.get(v)
            if img is None or not img.is_constant():
                return (
                    "unresolved",
                    {"reason": f"unknown {v} is unconstrained", "state": _digest(state)},
                )
            values[v] = img.constant_value()
        candidate = AffineMap2(tuple(values[v] for v in UNKNOWNS), self.model)
        if not candidate.is_invertible():
            return None
        # certify against the untouched system before accepting
        for p in self.original.values():
            if CycloElem.from_coef(p.evaluate(values)) != 0:
                return None
        return ("solution", candidate)


def _digest(state: ConstraintState) -> dict:
    return {
        "depth": state.depth,
        "records": dict(state.records),
        "substituted": sorted(state.subs),
        "constraints": [str(p) for _, p in state.constraints[:8]],
    }


def solve_aut(tag: str, n: int, depth_cap: int = 32) -> SolveOutcome:
    """Solve phi o F_n = F_n o phi for affine phi, from scratch.

    Returns the complete solution set over the algebraic closure when every
    branch grounds out (it does for the folding families at desk scale);
    otherwise the outcome carries the unresolved branch digests.
    """
    tag = normalize_tag(tag)
    if n < 2:
        raise ValueError("solve_aut is defined for n >= 2")
    fmap = fold(tag, n)
    engine = _Engine(fmap, _priority_list(tag, n), depth_cap)
    engine.run()
    unique = sorted(engine.solutions, key=lambda m: m.sort_key())
    if unique and not engine.unresolved:
        table, label = _group_structure(unique)
    else:
        table, label = [], "incomplete"
    return SolveOutcome(tag, n, SolutionSet(unique, label, table), engine.unresolved)
