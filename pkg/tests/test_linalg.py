import random
from fractions import Fraction

import pytest
from conftest import naive_rref

from apolarity.errors import AmbientMismatch
from apolarity.fields import QQ, NumberField
from apolarity.linalg import (
    Matrix,
    Subspace,
    kernel,
    matrix_rank,
    rref,
    solve,
    subspace_intersect,
    subspace_sum,
)


def q_matrix(rows):
    return Matrix.from_rows(
        [[QQ.from_rational(Fraction(v)) for v in row] for row in rows],
        field=QQ, ncols=len(rows[0]) if rows else 0)


def rand_fraction(rng):
    return Fraction(rng.randint(-9, 9), rng.choice([1, 1, 1, 2, 3, 5]))


class TestRref:
    def test_known_small_case(self):
        m = q_matrix([[0, 2, 4], [1, 1, 1], [2, 2, 2]])
        r, pivots = rref(m)
        assert pivots == (0, 1)
        got = [[e.as_fraction() for e in row] for row in r.rows]
        assert got == [[1, 0, -1], [0, 1, 2]]

    def test_matches_naive_oracle_on_randoms(self):
        rng = random.Random(42)
        for _ in range(120):
            nrows = rng.randint(0, 6)
            ncols = rng.randint(1, 6)
            rows = [[rand_fraction(rng) for _ in range(ncols)]
                    for _ in range(nrows)]
            if rng.random() < 0.4 and nrows >= 2:
                rows[-1] = [a + b for a, b in zip(rows[0], rows[1 % nrows])]
            want_rows, want_pivots = naive_rref(rows)
            m = q_matrix(rows)
            got, pivots = rref(m)
            assert list(pivots) == want_pivots
            assert [[e.as_fraction() for e in row] for row in got.rows] == want_rows

    def test_rank(self):
        assert matrix_rank(q_matrix([[1, 2], [2, 4], [0, 1]])) == 2
        assert matrix_rank(q_matrix([[0, 0], [0, 0]])) == 0


class TestKernel:
    def test_kernel_vectors_annihilate(self):
        rng = random.Random(7)
        for _ in range(80):
            nrows = rng.randint(0, 5)
            ncols = rng.randint(1, 7)
            rows = [[rand_fraction(rng) for _ in range(ncols)]
                    for _ in range(nrows)]
            m = q_matrix(rows) if rows else Matrix.from_rows([], field=QQ, ncols=ncols)
            ker = kernel(m)
            assert ker.dim == ncols - matrix_rank(m)
            for vec in ker.vectors():
                for row in rows:
                    s = sum((Fraction(a) * b.as_fraction()
                             for a, b in zip(row, vec)), Fraction(0))
                    assert s == 0

    def test_kernel_is_canonical(self):
        rng = random.Random(11)
        for _ in range(60):
            ncols = rng.randint(1, 6)
            rows = [[rand_fraction(rng) for _ in range(ncols)]
                    for _ in range(rng.randint(1, 4))]
            ker = kernel(q_matrix(rows))
            rebuilt = Subspace.from_raw_vectors(ker.rows, ncols, QQ)
            assert rebuilt.rows == ker.rows and rebuilt.pivots == list(ker.pivots)

    def test_full_kernel_for_zero_matrix(self):
        ker = kernel(q_matrix([[0, 0, 0]]))
        assert ker.is_full() and ker == Subspace.full(3, QQ)


class TestSubspaces:
    def build(self, rng, ambient, count):
        vecs = [[rand_fraction(rng) for _ in range(ambient)] for _ in range(count)]
        return Subspace.from_raw_vectors(vecs, ambient, QQ)

    def test_grassmann_dimension_formula(self):
        rng = random.Random(3)
        for _ in range(60):
            ambient = rng.randint(1, 7)
            a = self.build(rng, ambient, rng.randint(0, ambient))
            b = self.build(rng, ambient, rng.randint(0, ambient))
            s = subspace_sum(a, b)
            i = subspace_intersect(a, b)
            assert s.dim + i.dim == a.dim + b.dim
            assert s.contains_subspace(a) and s.contains_subspace(b)
            assert a.contains_subspace(i) and b.contains_subspace(i)

    def test_sum_with_unit_vectors_keeps_canonical_form(self):
        amb = 5
        a = Subspace.from_raw_vectors(
            [[1, 2, 0, 1, 0], [0, 0, 1, 3, 0]], amb, QQ)
        unit = Subspace.from_raw_vectors([[0, 0, 0, 0, 1]], amb, QQ)
        s = subspace_sum(a, unit)
        rebuilt = Subspace.from_raw_vectors(s.rows, amb, QQ)
        assert s.rows == rebuilt.rows
        assert s.dim == 3

    def test_intersection_known(self):
        # span{e0, e1} meet span{e1, e2} = span{e1}
        a = Subspace.from_raw_vectors([[1, 0, 0], [0, 1, 0]], 3, QQ)
        b = Subspace.from_raw_vectors([[0, 1, 0], [0, 0, 1]], 3, QQ)
        i = subspace_intersect(a, b)
        assert i.dim == 1
        assert [v.as_fraction() for v in i.vectors()[0]] == [0, 1, 0]

    def test_ambient_mismatch(self):
        a = Subspace.zero(3, QQ)
        b = Subspace.zero(4, QQ)
        with pytest.raises(AmbientMismatch):
            subspace_sum(a, b)

    def test_equality_is_basis_independent(self):
        a = Subspace.from_raw_vectors([[1, 1, 0], [0, 1, 1]], 3, QQ)
        b = Subspace.from_raw_vectors([[1, 2, 1], [1, 0, -1]], 3, QQ)
        assert a == b


class TestSolve:
    def test_consistent_system_roundtrip(self):
        rng = random.Random(5)
        for _ in range(60):
            nrows = rng.randint(1, 5)
            ncols = rng.randint(1, 5)
            rows = [[rand_fraction(rng) for _ in range(ncols)]
                    for _ in range(nrows)]
            x = [rand_fraction(rng) for _ in range(ncols)]
            b = [sum((r[j] * x[j] for j in range(ncols)), Fraction(0))
                 for r in rows]
            m = q_matrix(rows)
            got = solve(m, [QQ.from_rational(v) for v in b])
            assert got is not None
            for row, want in zip(rows, b):
                s = sum((a * v.as_fraction() for a, v in zip(row, got)),
                        Fraction(0))
                assert s == want

    def test_inconsistent_returns_none(self):
        m = q_matrix([[1, 0], [1, 0]])
        rhs = [QQ.from_rational(1), QQ.from_rational(2)]
        assert solve(m, rhs) is None

    def test_underdetermined_solution_verifies(self):
        m = q_matrix([[1, 1, 1]])
        got = solve(m, [QQ.from_rational(3)])
        assert got is not None
        assert sum(v.as_fraction() for v in got) == 3


class TestExtensionField:
    def field(self):
        return NumberField("z", [1, 1, 1])

    def e_matrix(self, field, rows):
        return Matrix.from_rows(
            [[field.element(v) for v in row] for row in rows],
            field=field, ncols=len(rows[0]))

    def test_kernel_over_extension(self):
        field = self.field()
        z = field.gen()
        # row (1, z): kernel spanned by (-z, 1) up to scaling
        m = self.e_matrix(field, [[[1], [0, 1]]])
        ker = kernel(m)
        assert ker.dim == 1
        v = ker.vectors()[0]
        assert v[0] + z * v[1] == field.zero

    def test_grassmann_over_extension(self):
        field = self.field()
        rng = random.Random(13)
        for _ in range(25):
            ambient = rng.randint(1, 4)

            def vec():
                return [field.element([rng.randint(-3, 3), rng.randint(-3, 3)])
                        for _ in range(ambient)]

            a = Subspace.from_vectors(
                [vec() for _ in range(rng.randint(0, ambient))], ambient, field)
            b = Subspace.from_vectors(
                [vec() for _ in range(rng.randint(0, ambient))], ambient, field)
            s = subspace_sum(a, b)
            i = subspace_intersect(a, b)
            assert s.dim + i.dim == a.dim + b.dim

    def test_solve_over_extension(self):
        field = self.field()
        z = field.gen()
        m = self.e_matrix(field, [[[0, 1], [1]]])  # z*x + y = rhs
        got = solve(m, [z * z])
        assert got is not None
        assert z * got[0] + got[1] == z * z
