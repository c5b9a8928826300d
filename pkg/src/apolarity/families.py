"""Closed-form rank engines for recognized families of forms.

Every family result recomputes its lower bound through the quotient engine
rather than trusting the closed formula; upper bounds are either solved
point decompositions or carried as self-contained cited statements.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .apolar import HFProfile, hf, minimal_generators, perp
from .bounds import (
    LowerBoundWitness,
    RankCertificate,
    UpperBoundWitness,
    essential_vars,
    lower_bound,
    upper_bound_from_points,
)
from .errors import (
    DegreeMismatch,
    EOutOfRange,
    FieldMismatch,
    HypothesisViolated,
    NotBinary,
    NotCIShape,
    NotMonomial,
    NOutOfRange,
    ParameterOutOfRange,
    ZeroForm,
)
from .fields import QQ, cyclotomic_field, root_of_unity, squarefree_check
from .poly import Poly, VarSet, apolar_action, restrict_to_vars

MONOMIAL_CITATION = (
    "rk(x0^a0*...*xn^an) = prod_{i>=1}(a_i+1) when 0 < a0 <= a_i for all i; "
    "the lower bound comes from the colon by X0^e, the upper from the points "
    "with coordinate 1 at x0 and (a_i+1)-th roots of unity at x_i.")
BINARY_CITATION = (
    "for a binary form, ann(F) = (h1, h2) with deg h1 <= deg h2 and "
    "deg h1 + deg h2 = deg F + 2; rk(F) = deg h1 if h1 is squarefree, "
    "otherwise rk(F) = deg h2.")
XASUMB_GEQ_CITATION = (
    "rk(x0^a*(x1^b+...+xn^b)) = (a+1)n when a+1 >= b: the colon by "
    "(X1,...,Xn) with a general linear t has Hilbert function "
    "(1, n, ..., n, n-1) summing to (a+1)n, and an apolar reduced scheme "
    "of (a+1)n points attains it.")
XASUMB_N2_CITATION = (
    "rk(x0^a*(x1^b+x2^b)) = 2b when a+1 <= b: the colon by X0 has Hilbert "
    "function (1, 2, ..., 2, 1) summing to 2b, and an apolar scheme of 2b "
    "points attains it.")
XASUMB_STRICT_CITATION = (
    "equality with the colon sum bn-n+2 would force every point of a "
    "minimal decomposition onto the hyperplane dual to X0, which cannot "
    "decompose a form involving x0; hence rk >= bn-n+3.")
XASUMB_BN_CITATION = (
    "the ideal of the products X_i*X_j (1 <= i < j <= n) together with "
    "(n-1)*X1^b - X2^b - ... - Xn^b - X0^b cuts out bn distinct points "
    "apolar to x0^a*(x1^b+...+xn^b), so rk <= bn.")
PLUS_POWER_CITATION = (
    "X_i contracts x0^(a+b) to zero for i >= 1, so adding x0^(a+b) to "
    "x0^a*(x1^b+...+xn^b) leaves the colon by (X1,...,Xn) unchanged; when "
    "a+1 >= b the rank stays (a+1)n, attained by (a+1)n points on the n "
    "coordinate lines through the dual point of x0.")
PLUS_N2_UPPER_CITATION = (
    "the ideal (n*X0^b - binomial(a+b,b)*(X1^b+...+Xn^b), X_i*X_j for "
    "1 <= i < j <= n) annihilates x0^a*(x0^b+x1^b+...+xn^b) and cuts out "
    "bn distinct points, so rk <= bn.")
PLUS_TRUNCATION_CITATION = (
    "contracting x0^a*(x0^b+x1^b+...+xn^b) by X0 keeps the pure power "
    "alive, which kills the top degree of the colon quotient: the sum "
    "drops exactly one below the value for the form without x0^(a+b), "
    "and no colon by a degree-one ideal reaches higher.")
CI_CITATION = (
    "when ann(F) = (q^a, g_1, ..., g_n) is a complete intersection with "
    "a*deg(q) <= deg(g_i) for all i, the colon by q gives the unconditional "
    "lower bound prod deg(g_i), and a general complete intersection of the "
    "same degrees through the apolar scheme is a reduced set of "
    "prod deg(g_i) points, so rk(F) = prod deg(g_i).")
VANDERMONDE_CITATION = (
    "rk(V_n) = (n-1)!: the colon by X1 gives the lower bound, and the "
    "(n-1)! points (1, s(r_2), ..., s(r_n)), s ranging over permutations "
    "of the n-1 distinct roots of t^(n-1)+...+t+1, decompose V_n.")


@dataclass(frozen=True)
class FamilyMatch:
    """Syntactic family tag with its parameters and rank statement."""

    tag: str    # Binary | Monomial | XaSumB | XaSumBPlusPower | CIperp | X0aG | Vandermonde | None
    parameters: dict
    citation: str

    def as_dict(self) -> dict:
        return {"tag": self.tag, "parameters": dict(self.parameters),
                "citation": self.citation}


@dataclass(frozen=True)
class SylvesterResult:
    """Binary-form rank data: ann(F) = (h1, h2), rank by the squarefree rule."""

    h1: Poly
    h2: Poly
    d1: int
    d2: int
    squarefree_h1: bool
    rank: int


def _binary_squarefree(h: Poly) -> bool:
    # squarefree over the closure: dehomogenize and keep the root at
    # infinity (degree drop) to multiplicity <= 1
    d = h.degree()
    coeffs = []
    for k in range(d + 1):
        c = h.coeff((k, d - k))
        coeffs.append(c.as_fraction())
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    drop = d - (len(coeffs) - 1)
    if drop > 1:
        return False
    return squarefree_check(coeffs)


def sylvester(f: Poly) -> SylvesterResult:
    """Rank of a binary form from the two generators of its annihilator.

    The form may be given in a larger ring; it must use exactly two
    variables after the essential reduction. In the equal-degrees case a
    squarefree pencil member replaces h1 when one is found among at most
    twenty deterministic combinations.
    """
    if f.is_zero():
        raise ZeroForm("the zero form has no rank")
    if not f.field.is_rationals():
        raise FieldMismatch("the binary rank rule is implemented over the rationals")
    d = f.degree()
    if d < 1:
        raise DegreeMismatch("constants have no rank")
    change, red = essential_vars(f)
    ess = len(f.varset) - change.removed
    if ess != 2:
        raise NotBinary(f"form uses {ess} essential variables, not 2")
    g = restrict_to_vars(red, (0, 1))
    gens = minimal_generators(perp(g, d + 1))
    if len(gens) != 2:
        raise ArithmeticError("binary annihilator did not have two generators")
    gens.sort(key=lambda p: p.degree())
    h1, h2 = gens
    d1, d2 = h1.degree(), h2.degree()
    if d1 + d2 != d + 2:
        raise ArithmeticError("generator degrees violate the binary structure")
    if d1 < d2:
        sq = _binary_squarefree(h1)
        return SylvesterResult(h1, h2, d1, d2, sq, d1 if sq else d2)
    # equal degrees: scan the pencil h1 + k*h2 for a squarefree member
    members = [h1, h2]
    for k in range(1, 10):
        members.append(h1 + h2.scale(k))
        members.append(h1 + h2.scale(-k))
    for m in members[:20]:
        if not m.is_zero() and _binary_squarefree(m):
            return SylvesterResult(m, h2, d1, d2, True, d1)
    return SylvesterResult(h1, h2, d1, d2, False, d2)


def _monomial_data(f: Poly):
    if f.is_zero() or len(f.terms) != 1:
        raise NotMonomial("expected a single nonzero term")
    exps = next(iter(f.terms))
    if sum(exps) < 1:
        raise NotMonomial("constants are not monomials of positive degree")
    involved = [i for i, e in enumerate(exps) if e > 0]
    pivot = min(involved, key=lambda i: exps[i])
    return exps, involved, pivot


def monomial_rank(f: Poly) -> int:
    """prod(a_i + 1) over the exponents away from a least positive one."""
    exps, involved, pivot = _monomial_data(f)
    return math.prod(exps[i] + 1 for i in involved if i != pivot)


def monomial_points(f: Poly):
    """The decomposition points of a monomial: pivot coordinate 1, the other
    involved coordinates running over all (a_i+1)-th roots of unity."""
    exps, involved, pivot = _monomial_data(f)
    others = [i for i in involved if i != pivot]
    n = len(f.varset)
    if not others:
        fld = QQ
        coords = tuple(fld.one if i == pivot else fld.zero for i in range(n))
        return [coords], fld
    m = math.lcm(*(exps[i] + 1 for i in others))
    fld = cyclotomic_field(m)
    points = []
    for ks in itertools.product(*(range(exps[i] + 1) for i in others)):
        coords = [fld.zero] * n
        coords[pivot] = fld.one
        for i, k in zip(others, ks):
            coords[i] = root_of_unity(fld, m, (m // (exps[i] + 1)) * k)
        points.append(tuple(coords))
    return points, fld


def monomial_certificate(f: Poly, e: int = 1,
                         solve_points: bool = True) -> RankCertificate:
    """Certified rank of a monomial: colon lower bound at degree e against
    the explicit cyclotomic point decomposition.

    With solve_points=False the decomposition is carried as a cited
    statement instead of being solved exactly (cheaper for large ranks).
    """
    exps, involved, pivot = _monomial_data(f)
    a0 = exps[pivot]
    if e < 1 or 2 * e > a0 + 1:
        raise EOutOfRange(f"need 1 <= e <= {(a0 + 1) // 2} for least exponent {a0}")
    rank = monomial_rank(f)
    te = Poly.variable(f.varset, pivot, e, field=f.field)
    witness = lower_bound(f, [te], te)
    if witness.bound != rank:
        raise ArithmeticError("monomial bound disagreed with the formula")
    if not solve_points:
        return RankCertificate(f, witness, None, "cited-upper", rank,
                               MONOMIAL_CITATION)
    points, _ = monomial_points(f)
    upper = upper_bound_from_points(f, points)
    if upper is None or upper.count != rank:
        raise ArithmeticError("monomial decomposition failed to solve")
    return RankCertificate(f, witness, upper, "certified-equal")


@dataclass(frozen=True)
class XaSumBResult:
    """Rank data for x0^a*(x1^b+...+xn^b), optionally plus x0^(a+b)."""

    form: Poly
    a: int
    b: int
    n: int
    plus_power: bool
    regime: str    # "a+1>=b" | "n=2" | "open"
    rank: int | None
    interval: tuple[int, int]
    lower: LowerBoundWitness
    upper: UpperBoundWitness | None
    status: str
    citations: tuple[str, ...]

    def as_dict(self) -> dict:
        out = {
            "form": str(self.form),
            "family": {
                "tag": "XaSumBPlusPower" if self.plus_power else "XaSumB",
                "parameters": {"a": self.a, "b": self.b, "n": self.n},
                "citation": self.citations[0],
            },
        }
        out.update(self.lower.as_dict())
        if self.upper is not None:
            out.update(self.upper.as_dict())
        else:
            out["points"] = []
            out["coefficients"] = []
        out["status"] = self.status
        if self.rank is not None:
            out["rank"] = self.rank
        out["interval"] = list(self.interval)
        out["citations"] = list(self.citations)
        return out


def build_xa_sum_b(a: int, b: int, n: int, plus_power: bool = False) -> Poly:
    varset = VarSet(tuple(f"x{i}" for i in range(n + 1)))
    total = Poly.zero(varset)
    for i in range(1, n + 1):
        exps = [0] * (n + 1)
        exps[0] = a
        exps[i] = b
        total = total + Poly(varset, {tuple(exps): 1})
    if plus_power:
        total = total + Poly.variable(varset, 0, a + b)
    return total


def _stripped(profile: HFProfile) -> tuple[int, ...]:
    vals = list(profile.values)
    while vals and vals[-1] == 0:
        vals.pop()
    return tuple(vals)


def xa_sum_b_rank(a: int, b: int, n: int, plus_power: bool = False,
                  seed: int = 0) -> XaSumBResult:
    """Rank (or interval) of x0^a*(x1^b+...+xn^b) with engine recomputation.

    a+1 >= b: rank (a+1)n via the colon by (X1,...,Xn) and a generic
    linear t; certified with explicit points when b <= a. n = 2 with
    a+1 <= b: rank 2b via the colon by X0, unconditional. Otherwise the
    colon sum is bn-n+2 and the strictness and bn-point statements close
    the gap to [bn-n+3, bn], an equality exactly when n = 3.

    With the extra x0^(a+b) term the colon by (X1,...,Xn) is untouched,
    so a+1 >= b keeps rank (a+1)n; but for a+1 < b the pure power
    truncates the colon by X0 one short of the plain sum, leaving only
    the interval [bn-n+1, bn] (with n = 2 that is [2b-1, 2b]).
    """
    if a < 1 or b < 2 or n < 2:
        raise ParameterOutOfRange("need a >= 1, b >= 2, n >= 2")
    form = build_xa_sum_b(a, b, n, plus_power)
    varset = form.varset
    x0 = Poly.variable(varset, 0)

    if plus_power and a + 1 < b:
        witness = lower_bound(form, [x0], x0)
        expected = (1,) + (n,) * (b - 1)
        engine_sum = b * n - n + 1
        if _stripped(witness.profile) != expected or witness.bound != engine_sum:
            raise ArithmeticError("colon profile disagreed with the "
                                  "truncated table")
        return XaSumBResult(form, a, b, n, True, "n=2" if n == 2 else "open",
                            None, (engine_sum, b * n), witness, None,
                            "bounds-only",
                            (PLUS_TRUNCATION_CITATION, PLUS_N2_UPPER_CITATION))

    if n == 2 and a + 1 <= b and not plus_power:
        witness = lower_bound(form, [x0], x0)
        expected = (1,) + (2,) * (b - 1) + (1,)
        if _stripped(witness.profile) != expected or witness.bound != 2 * b:
            raise ArithmeticError("colon profile disagreed with the 2b table")
        return XaSumBResult(form, a, b, n, plus_power, "n=2", 2 * b,
                            (2 * b, 2 * b), witness, None, "cited-upper",
                            (XASUMB_N2_CITATION,))

    if a + 1 >= b:
        gens = [Poly.variable(varset, i) for i in range(1, n + 1)]
        witness = lower_bound(form, gens, None, seed)
        expected = (1,) + (n,) * a + (n - 1,)
        rank = (a + 1) * n
        if _stripped(witness.profile) != expected or witness.bound != rank:
            raise ArithmeticError("colon profile disagreed with the (a+1)n table")
        cites = (XASUMB_GEQ_CITATION,)
        if plus_power:
            cites = cites + (PLUS_POWER_CITATION,)
        upper = None
        if b <= a and not plus_power:
            fld = cyclotomic_field(a + 1)
            points = []
            for i in range(1, n + 1):
                for k in range(a + 1):
                    coords = [fld.zero] * (n + 1)
                    coords[0] = root_of_unity(fld, a + 1, k)
                    coords[i] = fld.one
                    points.append(tuple(coords))
            upper = upper_bound_from_points(form, points)
            if upper is None or upper.count != rank:
                raise ArithmeticError("union of monomial points failed to solve")
            return XaSumBResult(form, a, b, n, plus_power, "a+1>=b", rank,
                                (rank, rank), witness, upper,
                                "certified-equal", cites)
        return XaSumBResult(form, a, b, n, plus_power, "a+1>=b", rank,
                            (rank, rank), witness, None, "cited-upper", cites)

    witness = lower_bound(form, [x0], x0)
    expected = (1,) + (n,) * (b - 1) + (1,)
    engine_sum = b * n - n + 2
    if _stripped(witness.profile) != expected or witness.bound != engine_sum:
        raise ArithmeticError("colon profile disagreed with the bn-n+2 table")
    low, high = b * n - n + 3, b * n
    cites = (XASUMB_STRICT_CITATION, XASUMB_BN_CITATION)
    if n == 3:
        return XaSumBResult(form, a, b, n, plus_power, "open", 3 * b,
                            (low, high), witness, None, "cited-upper", cites)
    return XaSumBResult(form, a, b, n, plus_power, "open", None,
                        (low, high), witness, None, "bounds-only", cites)


def ci_rank(f: Poly, q: Poly, a: int) -> RankCertificate:
    """Rank of F when ann(F) = (q^a, g_1, ..., g_n) is a complete intersection.

    Verifies the shape: q^a annihilates F, the annihilator has exactly one
    minimal generator per variable, the degree multiset contains a*deg(q),
    and the Hilbert function matches the Koszul product for those degrees.
    Requires a >= 2 and a*deg(q) at most every other generator degree.
    """
    from .apolar import koszul_ci_hf

    if f.is_zero() or q.is_zero():
        raise ZeroForm("zero input")
    if a < 2:
        raise HypothesisViolated("the power a must be at least 2")
    e = q.degree()
    if e < 1:
        raise DegreeMismatch("q must have positive degree")
    d = f.degree()
    qa = q ** a
    if not apolar_action(qa, f).is_zero():
        raise NotCIShape("q^a does not annihilate F")
    fperp = perp(f, d + 1)
    gens = minimal_generators(fperp)
    nvars = len(f.varset)
    if len(gens) != nvars:
        raise NotCIShape(f"annihilator has {len(gens)} minimal generators, "
                         f"need {nvars} for a complete intersection")
    degs = sorted(g.degree() for g in gens)
    ae = a * e
    if ae not in degs:
        raise NotCIShape(f"no minimal generator in degree {ae} = a*deg(q)")
    rest = list(degs)
    rest.remove(ae)
    if rest and ae > min(rest):
        raise HypothesisViolated("a*deg(q) must not exceed the other degrees")
    if hf(fperp).values != koszul_ci_hf(tuple(degs), d + 1).values:
        raise NotCIShape("Hilbert function is not the Koszul product: "
                         "the generators are not a regular sequence")
    rank = math.prod(rest)
    witness = lower_bound(f, [q], q)
    if witness.bound != rank:
        raise ArithmeticError("complete intersection bound disagreed with "
                              "the degree product")
    return RankCertificate(f, witness, None, "cited-upper", rank, CI_CITATION)


def detect_x0a_g(f: Poly):
    """Find (j, alpha, G) with F = x_j^alpha * G and G free of x_j, or None."""
    if f.is_zero():
        return None
    n = len(f.varset)
    for j in range(n):
        exps_j = {e[j] for e in f.terms}
        if len(exps_j) == 1:
            alpha = exps_j.pop()
            if alpha >= 1:
                quotient = Poly(f.varset,
                                {tuple(x - alpha if i == j else x
                                       for i, x in enumerate(e)): c
                                 for e, c in f.terms.items()}, f.field)
                if quotient.degree() >= 1:
                    return j, alpha, quotient
    return None


def x0a_g_certificate(f: Poly) -> RankCertificate:
    """Rank of F = x_j^alpha * G through the complete-intersection engine:
    ann(F) = (X_j^(alpha+1), ann(G)), so q = X_j with exponent alpha+1."""
    found = detect_x0a_g(f)
    if found is None:
        raise NotCIShape("form is not x_j^alpha * G with G free of x_j")
    j, alpha, _ = found
    return ci_rank(f, Poly.variable(f.varset, j, field=f.field), alpha + 1)


def elementary_symmetric(varset: VarSet, k: int, field=QQ) -> Poly:
    n = len(varset)
    if not 0 <= k <= n:
        raise ParameterOutOfRange(f"sigma_{k} undefined in {n} variables")
    terms = {}
    for combo in itertools.combinations(range(n), k):
        exps = [0] * n
        for i in combo:
            exps[i] = 1
        terms[tuple(exps)] = 1
    return Poly(varset, terms, field)


def build_vandermonde(n: int) -> Poly:
    varset = VarSet(tuple(f"x{i}" for i in range(1, n + 1)))
    v = Poly.constant(varset, 1)
    for i in range(n):
        for j in range(i + 1, n):
            v = v * (Poly.variable(varset, i) - Poly.variable(varset, j))
    return v


@dataclass(frozen=True)
class VandermondeResult:
    """Rank (n-1)! of the Vandermonde determinant with its witnesses."""

    n: int
    form: Poly
    rank: int
    lower: LowerBoundWitness
    upper: UpperBoundWitness | None
    status: str
    citation: str

    def as_dict(self) -> dict:
        out = {
            "form": str(self.form),
            "family": {"tag": "Vandermonde", "parameters": {"n": self.n},
                       "citation": self.citation},
        }
        out.update(self.lower.as_dict())
        if self.upper is not None:
            out.update(self.upper.as_dict())
        else:
            out["points"] = []
            out["coefficients"] = []
        out["status"] = self.status
        out["rank"] = self.rank
        return out


def vandermonde(n: int, solve_points: bool | None = None) -> VandermondeResult:
    """Certified rank of V_n = prod_{i<j}(x_i - x_j), 3 <= n <= 6.

    Verifies that every elementary symmetric polynomial annihilates V_n and
    that the colon by X1 reproduces (n-1)!. The permutation points are
    solved exactly for n <= 4 by default (the larger systems are costly);
    beyond that the decomposition is carried as a cited statement.
    """
    if not 3 <= n <= 6:
        raise NOutOfRange("Vandermonde engine covers 3 <= n <= 6")
    v = build_vandermonde(n)
    for k in range(1, n + 1):
        if not apolar_action(elementary_symmetric(v.varset, k), v).is_zero():
            raise ArithmeticError(f"sigma_{k} failed to annihilate V_{n}")
    x1 = Poly.variable(v.varset, 0)
    witness = lower_bound(v, [x1], x1)
    rank = math.factorial(n - 1)
    if witness.bound != rank:
        raise ArithmeticError("Vandermonde colon bound disagreed with (n-1)!")
    if solve_points is None:
        solve_points = n <= 4
    if not solve_points:
        return VandermondeResult(n, v, rank, witness, None, "cited-upper",
                                 VANDERMONDE_CITATION)
    fld = cyclotomic_field(n)
    roots = [fld.gen() ** k for k in range(1, n)]
    points = [(fld.one,) + perm for perm in itertools.permutations(roots)]
    upper = upper_bound_from_points(v, points)
    if upper is None or upper.count != rank:
        raise ArithmeticError("permutation points failed to solve V_n")
    return VandermondeResult(n, v, rank, witness, upper, "certified-equal",
                             VANDERMONDE_CITATION)


def _classify_xa_sum_b(f: Poly) -> FamilyMatch | None:
    if len(f.terms) < 2:
        return None
    one = f.field.one
    if any(c != one for c in f.terms.values()):
        return None
    for j0 in range(len(f.varset)):
        if any(e[j0] == 0 for e in f.terms):
            continue
        pure = [e for e in f.terms if sum(e) == e[j0]]
        body = [e for e in f.terms if sum(e) != e[j0]]
        if len(pure) > 1 or not body:
            continue
        a_vals = {e[j0] for e in body}
        if len(a_vals) != 1:
            continue
        a = a_vals.pop()
        others = []
        b_vals = set()
        ok = True
        for e in body:
            support = [i for i, x in enumerate(e) if x > 0 and i != j0]
            if len(support) != 1:
                ok = False
                break
            others.append(support[0])
            b_vals.add(e[support[0]])
        if not ok or len(b_vals) != 1 or len(set(others)) != len(others):
            continue
        b = b_vals.pop()
        n = len(others)
        if a < 1 or b < 2 or n < 2:
            continue
        if pure:
            if pure[0][j0] != a + b:
                continue
            return FamilyMatch("XaSumBPlusPower",
                               {"a": a, "b": b, "n": n, "pivot": j0},
                               PLUS_POWER_CITATION)
        cite = XASUMB_GEQ_CITATION if a + 1 >= b else (
            XASUMB_N2_CITATION if n == 2 else XASUMB_STRICT_CITATION)
        return FamilyMatch("XaSumB", {"a": a, "b": b, "n": n, "pivot": j0},
                           cite)
    return None


def classify(f: Poly) -> FamilyMatch:
    """Syntactic family recognition on the monomial support.

    No recognition up to general coordinate change is attempted; forms
    matching no pattern come back tagged None (binary forms are detected
    through the essential-variable count).
    """
    if f.is_zero() or not f.is_homogeneous() or f.degree() < 1:
        return FamilyMatch("None", {}, "")
    if len(f.terms) == 1:
        exps = next(iter(f.terms))
        return FamilyMatch("Monomial", {"exponents": list(exps)},
                           MONOMIAL_CITATION)
    n = len(f.varset)
    if 3 <= n <= 6 and f.degree() == n * (n - 1) // 2:
        # compare exponent tables so variable names do not matter
        v = build_vandermonde(n)
        target = v if f.field.is_rationals() else v.lift(f.field)
        if dict(f.terms) == dict(target.terms):
            return FamilyMatch("Vandermonde", {"n": n}, VANDERMONDE_CITATION)
    match = _classify_xa_sum_b(f)
    if match is not None:
        return match
    found = detect_x0a_g(f)
    if found is not None:
        j, alpha, _ = found
        return FamilyMatch("X0aG", {"pivot": j, "a": alpha}, CI_CITATION)
    if f.field.is_rationals():
        change, _ = essential_vars(f)
        if len(f.varset) - change.removed == 2:
            return FamilyMatch("Binary", {}, BINARY_CITATION)
    return FamilyMatch("None", {}, "")
