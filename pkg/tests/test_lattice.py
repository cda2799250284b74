import itertools

from hypothesis import given
from hypothesis import strategies as st

from linkmap.lattice import column_echelon, hermite_rows, in_lattice, kernel_complement, rank, solve_integer, xgcd

entries = st.integers(-6, 6)
matrices = st.integers(1, 4).flatmap(lambda m: st.lists(st.lists(entries, min_size=3, max_size=3), min_size=m, max_size=m))


def det3(u):
    return (
        u[0][0] * (u[1][1] * u[2][2] - u[1][2] * u[2][1])
        - u[0][1] * (u[1][0] * u[2][2] - u[1][2] * u[2][0])
        + u[0][2] * (u[1][0] * u[2][1] - u[1][1] * u[2][0])
    )


def matmul(a, b):
    return [[sum(a[r][t] * b[t][c] for t in range(len(b))) for c in range(len(b[0]))] for r in range(len(a))]


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_xgcd(a, b):
    g, u, v = xgcd(a, b)
    assert g >= 0 and u * a + v * b == g
    if a or b:
        assert a % g == 0 and b % g == 0


@given(matrices)
def test_column_echelon(a):
    h, u, pivots = column_echelon(a, 3)
    assert matmul(a, u) == h
    assert abs(det3(u)) == 1
    for row, col in pivots:
        assert h[row][col] > 0
        assert all(h[row][c] == 0 for c in range(col + 1, 3))
    for c in range(len(pivots), 3):
        assert all(h[r][c] == 0 for r in range(len(a)))


@given(matrices)
def test_rank_against_brute_force_minors(a):
    def minors(k):
        for rows in itertools.combinations(range(len(a)), k):
            for cols in itertools.combinations(range(3), k):
                sub = [[a[r][c] for c in cols] for r in rows]
                if k == 1:
                    yield sub[0][0]
                elif k == 2:
                    yield sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
                else:
                    yield det3(sub)
    expected = max([k for k in (1, 2, 3) if any(minors(k))] or [0])
    assert rank(a, 3) == expected


@given(matrices, st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_solve_consistent_system(a, x):
    b = [sum(r[c] * x[c] for c in range(3)) for r in a]
    sol = solve_integer(a, b, 3)
    assert sol is not None
    assert [sum(r[c] * sol[c] for c in range(3)) for r in a] == b


@given(matrices, st.lists(st.integers(-8, 8), min_size=4, max_size=4))
def test_solve_against_search(a, b):
    b = b[: len(a)]
    sol = solve_integer(a, b, 3)
    found = any(
        all(sum(r[c] * x[c] for c in range(3)) == bi for r, bi in zip(a, b))
        for x in itertools.product(range(-6, 7), repeat=3)
    )
    if sol is not None:
        assert all(sum(r[c] * sol[c] for c in range(3)) == bi for r, bi in zip(a, b))
    else:
        assert not found


def test_solve_parity_obstruction():
    assert solve_integer([[2, 0, 0]], [1], 3) is None
    assert solve_integer([[2, 4, 0]], [2], 3) is not None


@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=1, max_size=3), st.permutations(range(3)))
def test_hermite_is_canonical(gens, order):
    gens2 = [gens[i] for i in order if i < len(gens)]
    # adding a combination does not change the lattice
    extra = [sum(g[c] for g in gens) for c in range(3)]
    assert hermite_rows(gens, 3) == hermite_rows(gens2 + [extra], 3)


@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=1, max_size=3), st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_in_lattice(gens, coeffs):
    v = [sum(c * g[t] for c, g in zip(coeffs, gens)) for t in range(3)]
    assert in_lattice(v, gens)


def test_not_in_lattice():
    assert not in_lattice([1, 0], [[2, 0], [0, 1]])
    assert in_lattice([0, 0], [])


@given(matrices)
def test_kernel_complement(forms):
    u, rho = kernel_complement(forms, 3)
    assert abs(det3(u)) == 1
    for f in forms:
        for c in range(rho, 3):
            assert sum(f[r] * u[r][c] for r in range(3)) == 0
