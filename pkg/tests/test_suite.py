"""Suite resolution and the fuzz/single-matrix drivers."""

import pytest

from helpers import Z8, mat
from ringmat.matrix import Matrix
from ringmat.report import summarize
from ringmat.rings import QQ, ZZ, GuardError, ModRing
from ringmat.suite import IDENTITY_NAMES, SUITES, resolve_suite, run_suite

A = mat(ZZ, [[1, 2], [3, 4]])


def test_registry_covers_every_suite():
    seen = set()
    for names in SUITES.values():
        seen.update(names)
        for n in names:
            assert n in IDENTITY_NAMES
    assert seen == set(IDENTITY_NAMES)
    # groups are disjoint
    assert sum(len(v) for v in SUITES.values()) == len(IDENTITY_NAMES)


def test_resolve_suite():
    assert resolve_suite("all") == IDENTITY_NAMES
    assert resolve_suite("adjugate") == SUITES["adjugate"]
    assert resolve_suite("jacobi") == ("jacobi",)
    assert resolve_suite("core,jacobi") == SUITES["core"] + ("jacobi",)
    # duplicates collapse, order is first-mention
    assert resolve_suite("jacobi,adjugate") == (
        "jacobi", "adj_product", "adj_of_adj", "adj_scalar")
    with pytest.raises(GuardError):
        resolve_suite("no_such_thing")
    with pytest.raises(GuardError):
        resolve_suite("")


def test_run_suite_requires_one_mode():
    with pytest.raises(ValueError):
        run_suite(("det_oracle",))
    with pytest.raises(ValueError):
        run_suite(("det_oracle",), ring=ZZ, matrix=A)


def test_fuzz_mode_is_deterministic():
    kw = dict(ring=Z8, seed=5, count=8, size=3)
    left = run_suite(("det_product", "jacobi"), **kw)
    right = run_suite(("det_product", "jacobi"), **kw)
    assert [r.to_json() for r in left] == [r.to_json() for r in right]
    other = run_suite(("det_product", "jacobi"), ring=Z8, seed=6, count=8,
                      size=3)
    assert [r.to_json() for r in left] != [r.to_json() for r in other]


def test_fuzz_reports_carry_case_index():
    reports = run_suite(("trace_coefficient",), ring=ZZ, seed=0, count=5,
                        size=3)
    assert [r.inputs["case"] for r in reports] == [0, 1, 2, 3, 4]
    assert all(r.passed for r in reports)


def test_fuzz_count_zero_is_empty():
    assert run_suite("all", ring=ZZ, seed=0, count=0, size=3) == []


def test_fuzz_rejects_bad_dimensions():
    with pytest.raises(GuardError):
        run_suite(("det_oracle",), ring=ZZ, seed=0, count=-1, size=3)
    with pytest.raises(GuardError):
        run_suite(("det_oracle",), ring=ZZ, seed=0, count=1, size=-1)


def test_block_suite_size_guard():
    with pytest.raises(GuardError):
        run_suite(("block_commute",), ring=ZZ, seed=0, count=1, size=7)
    with pytest.raises(GuardError):
        run_suite("blocks", ring=ZZ, seed=0, count=1, size=9)
    # non-block identities may go bigger
    reports = run_suite(("trace_product",), ring=ZZ, seed=0, count=2, size=7)
    assert all(r.passed for r in reports)


def test_adjugate_fuzz_includes_singulars():
    reports = run_suite(("adj_of_adj",), ring=ZZ, seed=3, count=20, size=4)
    assert len(reports) == 20
    assert all(r.passed for r in reports)
    # every fifth case pins det = 0; the echoed input is that matrix
    from ringmat.serialize import matrix_from_json
    singulars = 0
    for r in reports:
        m = matrix_from_json(r.inputs["matrix"])
        if m.rows and m.det() == 0:
            singulars += 1
    assert singulars >= 4


def test_nilpotency_fuzz_exercises_the_gate():
    reports = run_suite(("nilpotency",), ring=Z8, seed=1, count=20, size=4)
    stats = summarize(reports)
    assert stats["failed"] == 0
    assert stats["hypothesis_not_met"] >= 1


def test_matrix_mode_runs_each_identity():
    reports = run_suite("all", matrix=A, seed=0)
    stats = summarize(reports)
    assert stats["failed"] == 0
    assert stats["total"] >= len(IDENTITY_NAMES)
    names = {r.identity for r in reports}
    assert "cayley_hamilton" in names and "jacobi" in names


def test_matrix_mode_jacobi_is_exhaustive_up_to_4():
    reports = run_suite(("jacobi",), matrix=mat(ZZ, [[1, 2, 0], [0, 1, 3],
                                                     [4, 0, 1]]), seed=0)
    assert len(reports) == 19   # sum of C(3,k)^2 for k = 1..3
    assert all(r.passed for r in reports)


def test_matrix_mode_gates_on_degenerate_shapes():
    empty = Matrix(ZZ, 0, 0, ())
    for name in ("adj_scalar", "jacobi", "rank1_block"):
        reports = run_suite((name,), matrix=empty, seed=0)
        assert len(reports) == 1
        assert not reports[0].hypothesis_met and reports[0].passed


def test_matrix_mode_det_oracle_guard_becomes_gate():
    big = Matrix.identity(ZZ, 9)
    reports = run_suite(("det_oracle",), matrix=big, seed=0)
    assert not reports[0].hypothesis_met


def test_params_reach_the_verifiers():
    a = mat(Z8, [[2]])
    rep = run_suite(("almkvist",), matrix=a, seed=0, params={"k": 2})[0]
    assert rep.passed and rep.hypothesis_met
    rep = run_suite(("almkvist",), matrix=a, seed=0, params={"k": 1})[0]
    assert not rep.hypothesis_met
    rep = run_suite(("frobenius_trace",), matrix=mat(ModRing(3), [[1, 2],
                                                                  [0, 1]]),
                    seed=0, params={"p": 3})[0]
    assert rep.passed and rep.hypothesis_met


def test_frobenius_defaults_to_the_characteristic():
    reports = run_suite(("frobenius_trace",), ring=ModRing(5), seed=0,
                        count=6, size=3)
    assert all(r.hypothesis_met and r.passed for r in reports)


def test_derivations_lift_non_polynomial_rings():
    # over Z the subject becomes tI + A over Z[t]; three derivations run
    reports = run_suite(("derivation_det",), matrix=A, seed=0)
    assert len(reports) == 3
    assert all(r.passed for r in reports)
    assert {r.inputs["derivation"]["label"] for r in reports} == \
        {"zero", "ddt", "g*ddt"}
