import random
from fractions import Fraction as F

import pytest

from oracles import random_invertible, random_matrix, random_stable_matrix
from quivercert.repgeom import (
    LinearFormMatrix,
    X,
    Y,
    Z,
    ZERO_FORM,
    blp2_point,
    commutes,
    is_stable,
    linear_form,
    matrix,
    minors,
    minors_independent,
    parse_matrix,
    quadric_span_basis,
    render_quadratic_form,
    syzygies,
    tensor_to_cubic,
    to_sl3,
    to_sl3_plane,
)

OPEN_ORBIT = parse_matrix("x,y,0;0,y,z")

# orbit representatives, largest orbit first
ORBIT_REPRESENTATIVES = [
    "x,y,0;0,y,z",
    "x,z,0;0,x,y",
    "x,y,z;0,x,y",
    "x,0,z;0,x,y",
    "x,y,0;0,x,y",
]


class TestMinors:
    def test_open_orbit(self):
        q = minors(OPEN_ORBIT)
        assert [render_quadratic_form(f) for f in q] == ["yz", "xz", "xy"]

    def test_rational_family(self):
        a, b, c = F(2), F(3), F(5)
        r = blp2_point(a, b, c)
        got = quadric_span_basis(minors(r))
        expected = quadric_span_basis(
            [
                # b z^2 - c xy, c x^2 - a yz, b xz - a y^2
                (0, 0, b, -c, 0, 0),
                (c, 0, 0, 0, 0, -a),
                (0, -a, 0, 0, b, 0),
            ]
        )
        assert got == expected

    def test_degenerate(self):
        r = parse_matrix("x,0,0;0,y,0")
        q = minors(r)
        assert [render_quadratic_form(f) for f in q] == ["0", "0", "xy"]
        assert not minors_independent(r)


class TestOrbitData:
    # representative matrix -> spanned minor space, largest orbit first
    SPANS = {
        "x,y,0;0,y,z": ["xy", "xz", "yz"],
        "x,z,0;0,x,y": ["x^2", "xy", "yz"],
        "x,y,z;0,x,y": ["x^2", "xy", "y^2 - xz"],
        "x,0,z;0,x,y": ["x^2", "xy", "xz"],
        "x,y,0;0,x,y": ["x^2", "xy", "y^2"],
    }

    def test_minor_spans(self):
        from quivercert.repgeom import parse_linear_form

        def quadric(text):
            # parse simple quadratic expressions over the fixed monomials
            from quivercert.repgeom import QUAD_MONOMIALS

            coeffs = [F(0)] * 6
            for chunk in text.replace("- ", "+ -").split("+"):
                chunk = chunk.strip()
                if not chunk:
                    continue
                sign = 1
                if chunk.startswith("-"):
                    sign, chunk = -1, chunk[1:].strip()
                coeffs[QUAD_MONOMIALS.index(chunk)] += sign
            return tuple(coeffs)

        for text, span in self.SPANS.items():
            got = quadric_span_basis(minors(parse_matrix(text)))
            expected = quadric_span_basis([quadric(s) for s in span])
            assert got == expected, text


class TestStability:
    def test_orbit_representatives_stable(self):
        for text in ORBIT_REPRESENTATIVES:
            assert is_stable(parse_matrix(text)), text

    def test_zero_row_unstable(self):
        assert not is_stable(parse_matrix("x,y,z;0,0,0"))

    def test_rank_deficient_unstable(self):
        assert not is_stable(parse_matrix("x,0,0;0,y,0"))

    def test_surjective_but_vector_degenerate(self):
        # images of (1,0) span only a line
        assert not is_stable(parse_matrix("x,0,0;0,y,z"))

    def test_minor_oracle_agreement_bulk(self):
        rng = random.Random(2024)
        both = {True: 0, False: 0}
        for _ in range(1000):
            r = random_matrix(rng)
            stable = is_stable(r)
            assert stable == minors_independent(r)
            both[stable] += 1
        # the sample must exercise both branches
        assert both[True] > 0 and both[False] > 0

    def test_gl_action_invariance(self):
        rng = random.Random(5)
        for _ in range(25):
            r = random_stable_matrix(rng)
            g = random_invertible(rng, 2)
            h = random_invertible(rng, 3)
            rows = [
                [
                    tuple(
                        sum(
                            g[i][k] * r.rows[k][l][v] * h[l][j]
                            for k in range(2)
                            for l in range(3)
                        )
                        for v in range(3)
                    )
                    for j in range(3)
                ]
                for i in range(2)
            ]
            moved = matrix(rows)
            assert is_stable(moved)
            assert quadric_span_basis(minors(moved)) == quadric_span_basis(minors(r))


class TestSyzygies:
    def test_kernel_membership(self):
        pair = syzygies(OPEN_ORBIT)
        for t in pair.tensors:
            assert all(c == 0 for c in tensor_to_cubic(t))

    def test_bulk_kernel_and_commutation(self):
        rng = random.Random(77)
        for _ in range(100):
            r = random_stable_matrix(rng)
            pair = syzygies(r)
            assert not pair.degenerate
            for t in pair.tensors:
                assert all(c == 0 for c in tensor_to_cubic(t))
            assert commutes(pair.sl3)

    def test_row_scaling_scales_tensor(self):
        r = OPEN_ORBIT
        scaled = matrix(
            [
                tuple(tuple(3 * c for c in entry) for entry in r.rows[0]),
                r.rows[1],
            ]
        )
        p, q = syzygies(r), syzygies(scaled)
        # first-row tensor picks up the row factor and the minors' factor
        assert q.tensors[0] == tuple(9 * c for c in p.tensors[0])
        assert q.tensors[1] == tuple(3 * c for c in p.tensors[1])

    def test_unstable_flagged_degenerate(self):
        pair = syzygies(parse_matrix("x,0,0;0,y,0"))
        assert pair.degenerate


class TestSl3Plane:
    def test_open_orbit_is_diagonal_plane(self):
        m1, m2 = to_sl3_plane(OPEN_ORBIT)
        for m in (m1, m2):
            # diagonal and traceless
            assert all(m[i][j] == 0 for i in range(3) for j in range(3) if i != j)
            assert sum(m[i][i] for i in range(3)) == 0
        # spans <E22 - E11, E33 - E22>
        from quivercert._linalg import row_space_basis

        got = row_space_basis([[m[i][i] for i in range(3)] for m in (m1, m2)])
        expected = row_space_basis([[-1, 1, 0], [0, -1, 1]])
        assert got == expected

    def test_family_formulas(self):
        a, b, c = F(2), F(3), F(5)
        s1, s2 = to_sl3_plane(blp2_point(a, b, c))
        expected1 = [[0, 0, -c], [-a, 0, 0], [0, -b, 0]]
        expected2 = [[0, b * c, 0], [0, 0, a * c], [a * b, 0, 0]]
        assert [list(row) for row in s1] == expected1
        assert [list(row) for row in s2] == expected2

    def test_traceless(self):
        rng = random.Random(13)
        for _ in range(20):
            m1, m2 = to_sl3_plane(random_stable_matrix(rng))
            assert sum(m1[i][i] for i in range(3)) == 0
            assert sum(m2[i][i] for i in range(3)) == 0

    def test_outside_span_rejected(self):
        # x^2 (x) x multiplies to x^3, so it is not a kernel tensor
        bad = [F(0)] * 18
        bad[0] = F(1)
        with pytest.raises(ValueError, match="outside the span"):
            to_sl3(tuple(bad))


class TestCommutes:
    def test_diagonal_pair(self):
        h1 = ((-1, 0, 0), (0, 1, 0), (0, 0, 0))
        h2 = ((0, 0, 0), (0, -1, 0), (0, 0, 1))
        assert commutes((h1, h2))

    def test_family_products(self):
        rng = random.Random(99)
        for _ in range(20):
            a, b, c = (F(rng.randint(1, 9)) for _ in range(3))
            assert commutes(to_sl3_plane(blp2_point(a, b, c)))

    def test_unit_matrices_do_not_commute(self):
        e12 = ((0, 1, 0), (0, 0, 0), (0, 0, 0))
        e21 = ((0, 0, 0), (1, 0, 0), (0, 0, 0))
        assert not commutes((e12, e21))


class TestBlp2Family:
    def test_generic_point(self):
        r = blp2_point(1, 1, 1)
        assert r.rows == matrix([(X, Y, Z), (Y, Z, X)]).rows
        assert is_stable(r)

    def test_coordinate_point_with_direction(self):
        r = blp2_point(1, 0, 0, direction=(1, 0))
        assert r.rows == matrix([(ZERO_FORM, Y, Z), (Y, Z, ZERO_FORM)]).rows
        assert is_stable(r)

    def test_all_coordinate_charts(self):
        for point in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
            for direction in [(1, 0), (0, 1), (2, 3)]:
                assert is_stable(blp2_point(*point, direction=direction))

    def test_family_stable_everywhere(self):
        rng = random.Random(31)
        for _ in range(50):
            coords = [F(rng.randint(-4, 4)) for _ in range(3)]
            if sum(1 for v in coords if v != 0) < 2:
                continue
            assert is_stable(blp2_point(*coords))

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            blp2_point(0, 0, 0)
        with pytest.raises(ValueError):
            blp2_point(1, 0, 0)
        with pytest.raises(ValueError):
            blp2_point(1, 0, 0, direction=(0, 0))

    def test_scaling_preserves_plane(self):
        base = to_sl3_plane(blp2_point(2, 3, 5))
        scaled = to_sl3_plane(blp2_point(4, 6, 10))
        from quivercert._linalg import row_space_basis

        flat = lambda pair: row_space_basis(
            [[m[i][j] for i in range(3) for j in range(3)] for m in pair]
        )
        assert flat(base) == flat(scaled)


class TestParsing:
    def test_entry_forms(self):
        r = parse_matrix("2x+3y, -z, 1/2x - y; 0, x, y+z")
        assert r.rows[0][0] == linear_form(2, 3, 0)
        assert r.rows[0][1] == linear_form(0, 0, -1)
        assert r.rows[0][2] == linear_form(F(1, 2), -1, 0)
        assert r.rows[1][0] == ZERO_FORM

    def test_bad_shape(self):
        with pytest.raises(ValueError):
            parse_matrix("x,y;z,x")
        with pytest.raises(ValueError):
            parse_matrix("x,y,z")

    def test_bad_entry(self):
        with pytest.raises(ValueError):
            parse_matrix("x,y,w;0,x,y")

    def test_constant_rejected(self):
        with pytest.raises(ValueError):
            parse_matrix("x,y,3;0,x,y")
