"""The general-parameter comparison grid and its modular fingerprints."""

import pytest

from plethy import (
    QQ,
    ZZ,
    ConsistencyError,
    ModuleElement,
    PrimeField,
    Sym,
    Tensor,
    Wedge,
    basis,
    conjecture_qchar,
    dim,
    hook_domain,
    hook_kernel_map,
    hook_kernel_vectors,
    hook_schur_polynomial,
    jordan_fingerprint,
    jordan_type_from_ranks,
    kernel_qchar,
    lhs_space,
    multiplication_map,
    qchar,
    scan,
    scan_one,
)

# ------------------------------------------------------------------- the map


def test_two_row_kernel_map_is_the_multiplication_map():
    # at M = 2 the defining map coincides with the wedge multiplication,
    # up to wrapping the loose factor in a length-one power
    for N, d in ((2, 4), (3, 3)):
        A = hook_kernel_map(ZZ, 2, N, d)
        B = multiplication_map(ZZ, N, d)
        assert [(w, m[0]) for (w, m) in basis(A.domain)] == list(basis(B.domain))
        for colA, colB in zip(A.cols, B.cols):
            assert {lab[0]: v for lab, v in colA.items()} == colB


def test_kernel_map_needs_two_rows():
    with pytest.raises(ValueError):
        hook_kernel_map(ZZ, 1, 2, 3)


def test_side_shapes():
    assert lhs_space(1, 3, 5) == Wedge(3, Sym(5))
    assert lhs_space(2, 2, 4) == Tensor(Wedge(1, Sym(1)), Wedge(3, Sym(5)))
    assert lhs_space(3, 2, 2) == Tensor(Wedge(2, Sym(2)), Wedge(4, Sym(4)))
    assert hook_domain(1, 3, 5) == Wedge(3, Sym(5))
    assert hook_domain(3, 2, 2).right.r == 2


def test_kernel_counts_match_tableaux_enumeration():
    for M, N, d in ((1, 2, 4), (2, 2, 4), (2, 3, 4), (3, 2, 3), (3, 1, 4)):
        vectors = hook_kernel_vectors(QQ, M, N, d)
        assert len(vectors) == hook_schur_polynomial(M, N, d)(1)
        assert kernel_qchar(QQ, M, N, d) == hook_schur_polynomial(M, N, d)


def test_qchar_comparison_two_rows_is_exact():
    for N, d in ((1, 3), (2, 4), (3, 5)):
        result = conjecture_qchar(2, N, d)
        assert result["qchar_equal"]
        assert result["qchar_shift"] == N  # the determinant twist
        assert result["dim_lhs"] == result["dim_rhs_char0"]


def test_qchar_comparison_single_column_is_verbatim():
    result = conjecture_qchar(1, 3, 5)
    assert result["qchar_equal"]
    assert result["qchar_shift"] == 0
    assert qchar(lhs_space(1, 3, 5)) == kernel_qchar(QQ, 1, 3, 5)


def test_qchar_shift_matches_degree_bookkeeping():
    # lowest degrees differ by C(M-1,2) + C(M+N-1,2) - C(N,2)
    for M, N, d in ((2, 2, 4), (3, 2, 3), (3, 3, 4)):
        result = conjecture_qchar(M, N, d)
        expected = (
            (M - 1) * (M - 2) // 2
            + (M + N - 1) * (M + N - 2) // 2
            - N * (N - 1) // 2
        )
        assert result["qchar_shift"] == expected


# ------------------------------------------------------------------- fingerprints


def test_jordan_type_from_ranks_unit():
    # one 3-block and one 1-block: ranks of powers 4, 2, 1, 0
    assert jordan_type_from_ranks([4, 2, 1, 0]) == (3, 1)
    assert jordan_type_from_ranks([3, 0]) == (1, 1, 1)
    assert jordan_type_from_ranks([0]) == ()
    assert jordan_type_from_ranks([5, 3, 1, 0]) == (3, 2)


def test_jordan_type_rejects_non_convex_ranks():
    with pytest.raises(ConsistencyError):
        jordan_type_from_ranks([4, 1, 1, 0])


def test_jordan_fingerprint_sym_mod_two():
    # X -> X, Y -> X + Y on quadratic forms in characteristic two:
    # the square of Y is fixed up to lower terms, leaving a 2 + 1 split
    assert jordan_fingerprint(2, Sym(1)) == (2,)
    assert jordan_fingerprint(2, Sym(2)) == (2, 1)
    assert jordan_fingerprint(2, Sym(3)) == (2, 2)
    assert jordan_fingerprint(3, Sym(2)) == (3,)
    assert jordan_fingerprint(5, Sym(4)) == (5,)


def test_jordan_fingerprint_respects_partition_sum():
    for p in (2, 3, 5):
        for space in (Sym(3), Wedge(2, Sym(3)), Tensor(Sym(1), Sym(2))):
            assert sum(jordan_fingerprint(p, space)) == dim(space)


def test_jordan_fingerprint_restriction():
    # the plane spanned by the top monomial is fixed: a single 1-block
    ring = PrimeField(2)
    v = ModuleElement.basis_vector(Sym(2), ring, 0)
    assert jordan_fingerprint(2, Sym(2), [v]) == (1,)


def test_jordan_fingerprint_rejects_non_invariant_span():
    ring = PrimeField(2)
    v = ModuleElement.basis_vector(Sym(2), ring, 1)  # XY is not fixed
    with pytest.raises(ConsistencyError):
        jordan_fingerprint(2, Sym(2), [v])


# ------------------------------------------------------------------- reports


def test_proven_rows_agree_everywhere():
    # M = 1 and M = 2 are the proven cases; every probe must come back equal
    reports, skipped = scan((1, 2), (1, 2, 3), range(0, 5), (2, 3))
    assert not skipped
    assert len(reports) == 2 * 3 * 5
    for r in reports:
        assert r.all_equal, (r.M, r.N, r.d)
        assert r.kernel_matches_tableaux


def test_three_row_scan_finding_regression():
    # a genuine modular discrepancy: dimensions and graded characters agree
    # but the unipotent acts with different block sizes in characteristic two
    r = scan_one(3, 2, 2, (2, 3))
    assert r.dim_lhs == r.dim_rhs_char0 == 15
    assert r.qchar_equal and r.qchar_shift == 6
    two, three = r.primes
    assert two.p == 2
    assert two.jordan_lhs == (2, 2, 2, 2, 2, 2, 2, 1)
    assert two.jordan_rhs == (2, 2, 2, 2, 2, 2, 1, 1, 1)
    assert not two.jordan_equal
    assert three.jordan_equal
    assert not r.all_equal


def test_three_row_larger_point_agrees():
    r = scan_one(3, 3, 5, (2, 3))
    assert r.all_equal
    assert r.dim_lhs == 336
    assert r.qchar_shift == 8


def test_report_serialization():
    r = scan_one(2, 2, 3, (2,))
    payload = r.to_json()
    assert payload["all_equal"] is True
    assert payload["primes"][0]["p"] == 2
    rows = r.csv_rows()
    assert len(rows) == 1
    assert rows[0][:4] == [2, 2, 3, 2]
    assert "+" in rows[0][7]  # jordan types render as summands


def test_scan_dim_cap_skips():
    reports, skipped = scan((3,), (3,), (5,), (2,), dim_cap=100)
    assert reports == []
    assert len(skipped) == 1
    assert "exceeds cap" in skipped[0]["reason"]


def test_scan_workers_match_serial():
    grid = ((1, 2), (2,), (2, 3), (2,))
    serial, _ = scan(*grid, workers=1)
    parallel, _ = scan(*grid, workers=2)
    assert [r.to_json() for r in serial] == [r.to_json() for r in parallel]


def test_scan_validates_primes():
    with pytest.raises(ValueError):
        scan((1,), (2,), (3,), (4,))


def test_kernel_qchar_homogeneous_mod_p():
    # elimination output must stay graded over a prime field too
    assert kernel_qchar(PrimeField(2), 2, 2, 4) == hook_schur_polynomial(2, 2, 4)
