"""Apolarity calculus: catalecticants, annihilator slices, colons, Hilbert functions.

Ideals appear only through their graded slices up to a truncation degree D,
held as canonical subspaces of each degree piece. The default truncation is
deg F + 1: every ideal handled here contains the annihilator of some form
(or is a point ideal), so all slices beyond the socle are full and carry no
information. Building runs in ascending degree, and once a slice fills the
whole degree piece every later slice is full by ideal closure.

Groebner machinery is deliberately absent; degreewise exact linear algebra
decides everything needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import (
    AmbientMismatch,
    DegreeMismatch,
    DuplicatePoint,
    EmptyGeneratorList,
    FieldMismatch,
    NonHomogeneous,
    ZeroForm,
)
from .fields import QQ, FieldElement, NumberField
from .linalg import Matrix, Subspace, kernel, matrix_rank, subspace_intersect
from .poly import Exps, Poly, VarSet, monomial_basis, space_dim


@lru_cache(maxsize=None)
def _basis_index(nvars: int, degree: int) -> dict:
    return {m: j for j, m in enumerate(monomial_basis(nvars, degree))}


@lru_cache(maxsize=None)
def _shift_map(nvars: int, degree: int, alpha: Exps) -> tuple[int, ...]:
    """Index map for multiplication by the monomial alpha."""
    target = _basis_index(nvars, degree + sum(alpha))
    return tuple(
        target[tuple(a + b for a, b in zip(m, alpha))]
        for m in monomial_basis(nvars, degree)
    )


def _falling(b: int, a: int) -> int:
    out = 1
    for j in range(a):
        out *= b - j
    return out


def _raw_zero(field: NumberField):
    return Fraction(0) if field.degree == 1 else field.zero.coords


def _poly_raw_vector(f: Poly, degree: int) -> list:
    vec = [_raw_zero(f.field)] * space_dim(len(f.varset), degree)
    index = _basis_index(len(f.varset), degree)
    for exps, c in f.terms.items():
        if sum(exps) != degree:
            raise NonHomogeneous("vectorization needs a single degree")
        vec[index[exps]] = c.coords[0] if f.field.degree == 1 else c.coords
    return vec


def _raw_vector_poly(varset: VarSet, field: NumberField, degree: int, row) -> Poly:
    basis = monomial_basis(len(varset), degree)
    terms = {}
    for exps, v in zip(basis, row):
        c = FieldElement(field, (v,)) if field.degree == 1 else FieldElement(field, v)
        if c:
            terms[exps] = c
    return Poly(varset, terms, field)


def _shift_raw_row(field: NumberField, row, nvars: int, degree: int,
                   t_terms: list[tuple[Exps, object]]) -> list:
    """Multiply the degree-`degree` coefficient row by the form with raw terms."""
    e = sum(t_terms[0][0])
    out = [_raw_zero(field)] * space_dim(nvars, degree + e)
    rational = field.degree == 1
    for alpha, c in t_terms:
        mp = _shift_map(nvars, degree, alpha)
        if rational:
            for j, v in enumerate(row):
                if v:
                    out[mp[j]] += c * v
        else:
            mul, add = field.mul_coords, field.add_coords
            for j, v in enumerate(row):
                if not field.is_zero_coords(v):
                    out[mp[j]] = add(out[mp[j]], mul(c, v))
    return out


def _poly_raw_terms(t: Poly) -> list[tuple[Exps, object]]:
    rational = t.field.degree == 1
    return [(exps, c.coords[0] if rational else c.coords)
            for exps, c in t.terms.items()]


# ---------------------------------------------------------------------------
# catalecticants


@dataclass(frozen=True)
class Catalecticant:
    """The contraction map T_i -> S_(d-i), g |-> g o F, as an explicit matrix.

    Rows follow the degree d-i monomial basis, columns the degree i basis.
    """

    form: Poly
    i: int
    matrix: Matrix

    def rank(self) -> int:
        return matrix_rank(self.matrix)


def catalecticant(f: Poly, i: int) -> Catalecticant:
    if f.is_zero():
        raise ZeroForm("catalecticant of the zero form")
    d = f.degree()
    if not 0 <= i <= d:
        raise DegreeMismatch(f"catalecticant index {i} outside 0..{d}")
    n = len(f.varset)
    cols = monomial_basis(n, i)
    row_index = _basis_index(n, d - i)
    field = f.field
    rational = field.degree == 1
    zero = _raw_zero(field)
    entries = [[zero] * len(cols) for _ in range(space_dim(n, d - i))]
    for j, alpha in enumerate(cols):
        for beta, c in f.terms.items():
            scale = 1
            ok = True
            for a, b in zip(alpha, beta):
                if a > b:
                    ok = False
                    break
                if a:
                    scale *= _falling(b, a)
            if not ok:
                continue
            gamma = tuple(b - a for a, b in zip(alpha, beta))
            r = row_index[gamma]
            if rational:
                entries[r][j] += c.coords[0] * scale
            else:
                entries[r][j] = field.add_coords(
                    entries[r][j],
                    tuple(x * scale for x in c.coords))
    wrapped = [[FieldElement(field, (v,)) if rational else FieldElement(field, v)
                for v in row] for row in entries]
    return Catalecticant(f, i, Matrix(field, len(entries), len(cols), wrapped))


# ---------------------------------------------------------------------------
# graded ideals


class GradedIdeal:
    """Degreewise slices 0..D of a homogeneous ideal, each a canonical Subspace."""

    __slots__ = ("varset", "field", "D", "slices")

    def __init__(self, varset: VarSet, field: NumberField, D: int,
                 slices: Sequence[Subspace]):
        if len(slices) != D + 1:
            raise AmbientMismatch("need one slice per degree 0..D")
        for i, s in enumerate(slices):
            if s.ambient != space_dim(len(varset), i):
                raise AmbientMismatch(f"slice {i} has ambient {s.ambient}")
            if s.field != field:
                raise FieldMismatch("slice over the wrong field")
        self.varset = varset
        self.field = field
        self.D = D
        self.slices = list(slices)

    @classmethod
    def unit(cls, varset: VarSet, D: int, field: NumberField = QQ) -> "GradedIdeal":
        n = len(varset)
        return cls(varset, field, D,
                   [Subspace.full(space_dim(n, i), field) for i in range(D + 1)])

    @classmethod
    def zero_ideal(cls, varset: VarSet, D: int, field: NumberField = QQ) -> "GradedIdeal":
        n = len(varset)
        return cls(varset, field, D,
                   [Subspace.zero(space_dim(n, i), field) for i in range(D + 1)])

    def dim(self, i: int) -> int:
        return self.slices[i].dim

    def slice_polys(self, i: int) -> list[Poly]:
        return [_raw_vector_poly(self.varset, self.field, i, row)
                for row in self.slices[i].rows]

    def contains_poly(self, g: Poly) -> bool:
        if g.is_zero():
            return True
        i = g.degree()
        if i > self.D:
            raise DegreeMismatch(f"degree {i} beyond the truncation {self.D}")
        return self.slices[i].contains_raw(_poly_raw_vector(g, i))

    def lift(self, field: NumberField) -> "GradedIdeal":
        if field == self.field:
            return self
        if not self.field.is_rationals():
            raise FieldMismatch("can only lift a rational-coefficient ideal")
        out = []
        for i, s in enumerate(self.slices):
            rows = [[field.from_rational(v).coords for v in row] for row in s.rows]
            out.append(Subspace(field, s.ambient, rows, list(s.pivots)))
        return GradedIdeal(self.varset, field, self.D, out)

    def verify_closure(self) -> bool:
        """Check T_1 * slice_i inside slice_(i+1) on every basis element."""
        n = len(self.varset)
        for i in range(self.D):
            nxt = self.slices[i + 1]
            if nxt.is_full() or not self.slices[i].rows:
                continue
            for row in self.slices[i].rows:
                for k in range(n):
                    alpha = tuple(1 if j == k else 0 for j in range(n))
                    shifted = _shift_raw_row(self.field, row, n, i, [(alpha, _one_raw(self.field))])
                    if not nxt.contains_raw(shifted):
                        return False
        return True

    def __eq__(self, other):
        return (isinstance(other, GradedIdeal) and self.varset == other.varset
                and self.field == other.field and self.D == other.D
                and self.slices == other.slices)

    def __repr__(self):
        dims = tuple(s.dim for s in self.slices)
        return f"GradedIdeal(D={self.D}, dims={dims})"


def _one_raw(field: NumberField):
    return Fraction(1) if field.degree == 1 else field.one.coords


def perp(f: Poly, D: int | None = None) -> GradedIdeal:
    """The annihilator of a nonzero form, sliced up to D (default deg F + 1)."""
    if f.is_zero():
        raise ZeroForm("the zero form has no annihilator")
    d = f.degree()
    if D is None:
        D = d + 1
    if D < d + 1:
        raise DegreeMismatch("truncation must reach deg F + 1")
    n = len(f.varset)
    slices = []
    for i in range(D + 1):
        if i > d:
            slices.append(Subspace.full(space_dim(n, i), f.field))
        else:
            slices.append(kernel(catalecticant(f, i).matrix))
    return GradedIdeal(f.varset, f.field, D, slices)


def ideal_from_generators(varset: VarSet, gens: Sequence[Poly], D: int,
                          field: NumberField | None = None) -> GradedIdeal:
    """Slices of (g_1, .., g_k) up to D, built by ascending-degree closure."""
    if not gens:
        raise EmptyGeneratorList("need at least one generator")
    field = field or gens[0].field
    n = len(varset)
    by_degree: dict[int, list[Poly]] = {}
    for g in gens:
        if g.is_zero():
            continue
        if g.varset != varset:
            raise AmbientMismatch("generator over a different variable set")
        if g.field != field:
            raise FieldMismatch("generator over a different field")
        by_degree.setdefault(g.degree(), []).append(g)
    slices: list[Subspace] = []
    shift_terms = [
        [(tuple(1 if j == k else 0 for j in range(n)), _one_raw(field))]
        for k in range(n)
    ]
    for i in range(D + 1):
        amb = space_dim(n, i)
        if i > 0 and slices[i - 1].is_full():
            slices.append(Subspace.full(amb, field))
            continue
        cur = Subspace.zero(amb, field)
        if i > 0:
            for row in slices[i - 1].rows:
                for terms in shift_terms:
                    cur.insert_raw(_shift_raw_row(field, row, n, i - 1, terms))
                    if cur.is_full():
                        break
                if cur.is_full():
                    break
        for g in by_degree.get(i, []):
            if not cur.is_full():
                cur.insert_raw(_poly_raw_vector(g, i))
        slices.append(cur)
    return GradedIdeal(varset, field, D, slices)


def colon_by_form(f: Poly, t: Poly, D: int | None = None) -> GradedIdeal:
    """(F_perp : t) computed as the annihilator of t o F."""
    if f.is_zero():
        raise ZeroForm("colon against the zero form")
    if t.is_zero():
        raise ZeroForm("colon by the zero operator")
    from .poly import apolar_action

    d = f.degree()
    if D is None:
        D = d + 1
    g = apolar_action(t, f)
    n = len(f.varset)
    if g.is_zero():
        return GradedIdeal.unit(f.varset, D, f.field)
    if g.degree() == 0:
        slices = [Subspace.zero(1, f.field)]
        slices += [Subspace.full(space_dim(n, i), f.field) for i in range(1, D + 1)]
        return GradedIdeal(f.varset, f.field, D, slices)
    return perp(g, D)


def colon_by_ideal(f: Poly, gens: Sequence[Poly], D: int | None = None) -> GradedIdeal:
    """(F_perp : I) for I generated in one degree, via degreewise intersection."""
    if not gens:
        raise EmptyGeneratorList("colon needs at least one generator")
    degrees = set()
    for g in gens:
        if g.is_zero():
            raise ZeroForm("zero generator in the colon ideal")
        if not g.is_homogeneous():
            raise NonHomogeneous(f"generator {g} is not homogeneous")
        degrees.add(g.degree())
    if len(degrees) != 1:
        raise DegreeMismatch(f"generators span degrees {sorted(degrees)}")
    if degrees.pop() < 1:
        raise DegreeMismatch("generators must have positive degree")
    out = colon_by_form(f, gens[0], D)
    for g in gens[1:]:
        nxt = colon_by_form(f, g, D)
        slices = [subspace_intersect(a, b)
                  for a, b in zip(out.slices, nxt.slices)]
        out = GradedIdeal(f.varset, f.field, out.D, slices)
    return out


def add_principal(ideal: GradedIdeal, t: Poly) -> GradedIdeal:
    """Slices of I + (t) from the slices of I.

    For a monomial t the new contribution is a set of unit coordinate
    vectors, so each slice splits off those coordinates and only the
    complementary block needs re-reduction; otherwise the t-multiples are
    inserted one by one.
    """
    if t.is_zero():
        raise ZeroForm("cannot add the zero form")
    if t.varset != ideal.varset:
        raise AmbientMismatch("t lives over a different variable set")
    if t.field != ideal.field:
        t = t.lift(ideal.field)
    e = t.degree()
    if e < 1 or e > ideal.D:
        raise DegreeMismatch(f"degree of t must lie in 1..{ideal.D}")
    n = len(ideal.varset)
    field = ideal.field
    t_terms = _poly_raw_terms(t)
    is_monomial = len(t_terms) == 1
    out: list[Subspace] = []
    for i in range(ideal.D + 1):
        amb = space_dim(n, i)
        if i < e:
            out.append(ideal.slices[i].copy())
            continue
        if out[i - 1].is_full():
            out.append(Subspace.full(amb, field))
            continue
        base = ideal.slices[i]
        if base.is_full():
            out.append(base.copy())
            continue
        if is_monomial:
            alpha = t_terms[0][0]
            cols = sorted(_shift_map(n, i - e, alpha))
            out.append(_sum_with_unit_columns(base, cols, field))
        else:
            cur = base.copy()
            for m in monomial_basis(n, i - e):
                row = _shift_raw_row(
                    field,
                    [_one_raw(field)],
                    n, 0,
                    [(tuple(a + b for a, b in zip(alpha, m)), c)
                     for alpha, c in t_terms],
                )
                cur.insert_raw(row)
                if cur.is_full():
                    break
            out.append(cur)
    return GradedIdeal(ideal.varset, field, ideal.D, out)


def _sum_with_unit_columns(base: Subspace, cols: list[int],
                           field: NumberField) -> Subspace:
    """base + span{e_k : k in cols}, assembled directly in canonical form."""
    amb = base.ambient
    colset = set(cols)
    keep = [j for j in range(amb) if j not in colset]
    zero = Fraction(0) if field.degree == 1 else field.zero.coords
    one = Fraction(1) if field.degree == 1 else field.one.coords
    projected = [[row[j] for j in keep] for row in base.rows]
    reduced = Subspace.from_raw_vectors(projected, len(keep), field)
    rows = []
    pivots = []
    unit_iter = iter(cols)
    next_unit = next(unit_iter, None)
    for row, p in zip(reduced.rows, reduced.pivots):
        full_pivot = keep[p]
        while next_unit is not None and next_unit < full_pivot:
            unit_row = [zero] * amb
            unit_row[next_unit] = one
            rows.append(unit_row)
            pivots.append(next_unit)
            next_unit = next(unit_iter, None)
        full_row = [zero] * amb
        for j, v in zip(keep, row):
            full_row[j] = v
        rows.append(full_row)
        pivots.append(full_pivot)
    while next_unit is not None:
        unit_row = [zero] * amb
        unit_row[next_unit] = one
        rows.append(unit_row)
        pivots.append(next_unit)
        next_unit = next(unit_iter, None)
    return Subspace(field, amb, rows, pivots)


# ---------------------------------------------------------------------------
# Hilbert functions


@dataclass(frozen=True)
class HFProfile:
    """Hilbert function values of T/I for degrees 0..D."""

    values: tuple[int, ...]
    stabilized: bool | None = None

    @property
    def D(self) -> int:
        return len(self.values) - 1

    def total(self) -> int:
        return sum(self.values)

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def hf(ideal: GradedIdeal) -> HFProfile:
    """Hilbert function of the quotient by the ideal, degrees 0..D."""
    n = len(ideal.varset)
    return HFProfile(tuple(space_dim(n, i) - ideal.slices[i].dim
                           for i in range(ideal.D + 1)))


def koszul_ci_hf(degrees: Sequence[int], upto: int) -> HFProfile:
    """HF of an Artinian complete intersection with the given generator degrees."""
    series = [1]
    for d in degrees:
        block = [0] * (len(series) + d - 1)
        for i, v in enumerate(series):
            if v:
                for j in range(d):
                    block[i + j] += v
        series = block
    vals = [series[i] if i < len(series) else 0 for i in range(upto + 1)]
    return HFProfile(tuple(vals))


# ---------------------------------------------------------------------------
# point sets


def normalize_point(point: Sequence, field: NumberField) -> tuple[FieldElement, ...]:
    vals = [v if isinstance(v, FieldElement) else field.from_rational(v)
            for v in point]
    lead = next((v for v in vals if v), None)
    if lead is None:
        raise ZeroForm("the zero vector is not a projective point")
    inv = lead.inverse()
    return tuple(v * inv for v in vals)


def points_ideal(points: Sequence[Sequence], varset: VarSet, D: int,
                 field: NumberField = QQ) -> GradedIdeal:
    """The ideal of a finite reduced point set, sliced by evaluation kernels."""
    n = len(varset)
    norm = []
    seen = set()
    for p in points:
        if len(p) != n:
            raise AmbientMismatch("point length does not match the variable count")
        q = normalize_point(p, field)
        key = tuple(v.coords for v in q)
        if key in seen:
            raise DuplicatePoint(f"point ({', '.join(str(v) for v in q)}) repeats")
        seen.add(key)
        norm.append(q)
    rational = field.degree == 1
    slices = []
    for i in range(D + 1):
        basis = monomial_basis(n, i)
        rows = []
        for q in norm:
            row = []
            for exps in basis:
                acc = field.one
                for v, e in zip(q, exps):
                    if e:
                        acc = acc * (v ** e)
                row.append(acc.coords[0] if rational else acc.coords)
            rows.append(row)
        mat = Matrix(field, len(rows), len(basis),
                     [[FieldElement(field, (v,)) if rational else FieldElement(field, v)
                       for v in row] for row in rows])
        slices.append(kernel(mat))
    return GradedIdeal(varset, field, D, slices)


def hf_points(points: Sequence[Sequence], varset: VarSet, D: int,
              field: NumberField = QQ) -> tuple[HFProfile, GradedIdeal]:
    """HF of a reduced point set up to D, plus its sliced ideal.

    The profile notes whether the tail has stabilized (last two values equal,
    the regularity plateau for points).
    """
    ideal = points_ideal(points, varset, D, field)
    vals = tuple(space_dim(len(varset), i) - ideal.slices[i].dim
                 for i in range(D + 1))
    stab = len(vals) >= 2 and vals[-1] == vals[-2]
    return HFProfile(vals, stabilized=stab), ideal


def minimal_generators(ideal: GradedIdeal) -> list[Poly]:
    """A deterministic minimal generating set read off the graded slices.

    In each degree the canonical basis rows that survive modulo
    T_1 * (previous slice) are kept, in basis order.
    """
    n = len(ideal.varset)
    field = ideal.field
    gens: list[Poly] = []
    shift_terms = [
        [(tuple(1 if j == k else 0 for j in range(n)), _one_raw(field))]
        for k in range(n)
    ]
    for i in range(ideal.D + 1):
        cur = ideal.slices[i]
        if not cur.rows:
            continue
        grown = Subspace.zero(cur.ambient, field)
        if i > 0 and ideal.slices[i - 1].rows:
            for row in ideal.slices[i - 1].rows:
                for terms in shift_terms:
                    grown.insert_raw(_shift_raw_row(field, row, n, i - 1, terms))
                    if grown.is_full():
                        break
                if grown.is_full():
                    break
        if grown.is_full():
            continue
        for row in cur.rows:
            if grown.insert_raw(list(row)):
                gens.append(_raw_vector_poly(ideal.varset, field, i, row))
    return gens
