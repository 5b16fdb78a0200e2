from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from multctl.lp import LinearProgram, LPInputError, LPOutcome, Status, check_certificates, solve_max
from oracles import lp_max_by_vertices

EXAMPLE = LinearProgram(2, [[2, 0], [0, 3]], [1, 1], [1, 1])


def test_example_optimum_and_certificates():
    out = solve_max(EXAMPLE)
    assert out.status is Status.OPTIMAL
    assert out.value == F(5, 6)
    assert out.solution == (F(1, 2), F(1, 3))
    assert check_certificates(EXAMPLE, out)


def test_unbounded_without_rows():
    assert solve_max(LinearProgram(1, [], [], [1])).status is Status.UNBOUNDED


def test_infeasible():
    out = solve_max(LinearProgram(1, [[1]], [-1], [0]))
    assert out.status is Status.INFEASIBLE
    assert out.value is None and out.solution is None


def test_certificate_rejects_tampering():
    out = solve_max(EXAMPLE)
    assert not check_certificates(EXAMPLE, LPOutcome(Status.OPTIMAL, F(1), out.solution, out.dual_solution))
    assert not check_certificates(EXAMPLE, LPOutcome(Status.OPTIMAL, out.value, (F(1), F(1)), out.dual_solution))


@pytest.mark.parametrize("rows,rhs,obj", [
    ([[1, 2]], [1], [1]),            # ragged
    ([[1]], [1, 2], [1]),            # rhs length
    ([[1]], [1], [1, 1]),            # objective length
])
def test_malformed_dimensions(rows, rhs, obj):
    with pytest.raises(LPInputError):
        LinearProgram(1, rows, rhs, obj)


def test_degenerate_program_terminates():
    # a classic cycling example for the textbook largest-coefficient rule
    A = [[F(1, 2), F(-11, 2), F(-5, 2), 9], [F(1, 2), F(-3, 2), F(-1, 2), 1], [1, 0, 0, 0]]
    out = solve_max(LinearProgram(4, A, [0, 0, 1], [10, -57, -9, -24]))
    assert out.status is Status.OPTIMAL and out.value == 1
    assert check_certificates(LinearProgram(4, A, [0, 0, 1], [10, -57, -9, -24]), out)


def test_negative_rhs_feasible():
    # y1 + y2 >= 1 written as -y1 - y2 <= -1, with y1, y2 <= 2
    lp = LinearProgram(2, [[-1, -1], [1, 0], [0, 1]], [-1, 2, 2], [-1, -2])
    out = solve_max(lp)
    assert out.status is Status.OPTIMAL and out.value == -1
    assert check_certificates(lp, out)


def test_deterministic():
    assert solve_max(EXAMPLE) == solve_max(EXAMPLE)


small = st.integers(-3, 4)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n),
    st.lists(st.lists(small, min_size=n, max_size=n), min_size=0, max_size=3),
    st.lists(small, min_size=3, max_size=3),
    st.lists(small, min_size=n, max_size=n),
)))
def test_against_vertex_enumeration(data):
    n, A, b, c = data
    b = b[: len(A)]
    lp = LinearProgram(n, A, b, c)
    out = solve_max(lp)
    ref = lp_max_by_vertices(A, b, c)
    if ref is None:
        assert out.status is Status.INFEASIBLE
    elif ref == "unbounded":
        assert out.status is Status.UNBOUNDED
    else:
        assert out.status is Status.OPTIMAL and out.value == ref
        assert check_certificates(lp, out)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(0, 5), min_size=2, max_size=2), min_size=1, max_size=4),
       st.lists(st.integers(1, 6), min_size=2, max_size=2),
       st.fractions(min_value=F(1, 7), max_value=7))
def test_scaling_invariance(gens, v, lam):
    # Newton-type program: rows are coordinates, columns generators
    rows = [[g[i] for g in gens] for i in range(2)]
    k = len(gens)
    base = solve_max(LinearProgram(k, rows, v, [1] * k))
    by_rhs = solve_max(LinearProgram(k, rows, [lam * x for x in v], [1] * k))
    by_obj = solve_max(LinearProgram(k, rows, v, [lam] * k))
    assert base.status == by_rhs.status == by_obj.status
    if base.status is Status.OPTIMAL:
        # each scaling alone multiplies the optimum by lam; both together by lam**2
        assert by_rhs.value == lam * base.value
        assert by_obj.value == lam * base.value
