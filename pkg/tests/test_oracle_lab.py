import pytest

from padic_forking import (
    BELOW_PRECISION,
    Context,
    ContextTooLarge,
    DistanceValue,
    UnknownSuite,
    galois_type,
    span,
)
from padic_forking.oracle_lab import (
    PropertyConfig,
    oracle_dist,
    oracle_type_distance,
    render_report,
    run_suite,
    span_set,
    suite_names,
)


def test_oracle_dist_examples():
    c = Context(3, 3, 2)
    S = span([c.vector([1, 0])])
    assert oracle_dist(c.vector([1, 3]), S) == DistanceValue(1)
    assert oracle_dist(c.vector([5, 0]), S) is BELOW_PRECISION
    assert oracle_dist(c.vector([3, 9]), span([], c)) == DistanceValue(1)


def test_oracle_type_distance_examples():
    c = Context(2, 2, 2)
    q = galois_type(c.vector([1, 1]), [])
    assert oracle_type_distance(q, q) is BELOW_PRECISION
    q1, q2 = galois_type(c.vector([1, 0]), []), galois_type(c.vector([2, 0]), [])
    assert oracle_type_distance(q1, q2) == DistanceValue(0)
    A = [c.vector([1, 0])]
    assert oracle_type_distance(galois_type(c.vector([0, 2]), A), galois_type(c.vector([1, 2]), A)) == DistanceValue(0)


def test_enumeration_limit():
    big = Context(2, 11, 2)
    with pytest.raises(ContextTooLarge):
        span_set(big, [(1, 0)])
    with pytest.raises(ValueError):
        PropertyConfig(enumeration_contexts=((2, 11, 2),))


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("unknown")


def test_named_suites_exist():
    names = set(suite_names())
    for required in (
        "independence_symmetry",
        "naive_closure_counterexample",
        "lattice_dist_oracle",
        "type_distance_oracle",
        "pregeometry_exchange",
        "representative_independence",
        "fp_line_correspondence",
    ):
        assert required in names
    assert run_suite("prop66_symmetry", PropertyConfig(instances=20)).name == "independence_symmetry"


def test_suites_reproducible():
    cfg = PropertyConfig(seed=99, instances=40)
    for name in ("independence_symmetry", "pregeometry_exchange", "lattice_dist_oracle"):
        assert run_suite(name, cfg) == run_suite(name, cfg)


def test_report_format():
    cfg = PropertyConfig(instances=10)
    reports = [run_suite("core_ultrametric", cfg), run_suite("naive_closure_counterexample", cfg)]
    text = render_report(reports)
    assert text.splitlines()[0].startswith("core_ultrametric instances=10 ")
    assert text.splitlines()[0].endswith(" failures=0 PASS")
    assert text.splitlines()[-1] == "suites=2 failed=0 failures=0"


def test_every_suite_passes_quickly():
    cfg = PropertyConfig(instances=15, seed=7)
    for name in suite_names():
        if name in ("same_type_witness", "fp_line_correspondence"):
            continue  # exhaustive; covered in the acceptance run
        r = run_suite(name, cfg)
        assert r.passed, r.details()
