"""The full suite: dependency gating, determinism, section coverage."""

import pytest

from sqtkit.catalog import catalog, negative_control
from sqtkit.report import FAIL, INFO, PASS, SKIPPED
from sqtkit.suite import SECTIONS, SuiteOptions, run_suite


@pytest.fixture(scope="module")
def rminus_report():
    return run_suite(catalog("kC2-Rminus"))


def test_rminus_full_suite_passes(rminus_report):
    assert rminus_report.passed
    assert len(rminus_report) > 60
    assert {c.section for c in rminus_report} == set(SECTIONS)


def test_sections_in_dependency_order(rminus_report):
    order = [c.section for c in rminus_report]
    firsts = [order.index(s) for s in SECTIONS]
    assert firsts == sorted(firsts)


def test_report_is_byte_identical_across_runs(rminus_report):
    assert run_suite(catalog("kC2-Rminus")).to_json() == rminus_report.to_json()


def test_witness_present_iff_fail(rminus_report):
    bad = run_suite(negative_control("bad-antipode"))
    for rep in (rminus_report, bad):
        for c in rep:
            assert (c.witness is not None) == (c.status == FAIL), c


def test_bad_antipode_gates_downstream():
    rep = run_suite(negative_control("bad-antipode"))
    assert not rep.passed
    assert all(c.section == "hopf" for c in rep.failures())
    skipped = [c.section for c in rep if c.status == SKIPPED]
    assert skipped == list(SECTIONS[1:])


def test_bad_R_fails_in_sqt_and_skips_rest():
    rep = run_suite(negative_control("bad-R-g1"))
    assert [c.name for c in rep.failures()] == ["condition (2)"]
    assert {c.section for c in rep if c.status == SKIPPED} == set(SECTIONS[2:])


def test_skip_option():
    rep = run_suite(catalog("kC2-triv"), options=SuiteOptions(skip=("double", "braiding")))
    assert rep.passed
    assert {c.section for c in rep if c.status == SKIPPED} == {"double", "braiding"}


def test_informational_checks_do_not_fail(rminus_report):
    assert any(c.status == INFO for c in rminus_report)
    assert all(c.status in (PASS, INFO, SKIPPED) for c in rminus_report)


def test_nonabelian_group_algebra_double_section_fails():
    # documented finding: Thm 2.11's double of (k[S3], 1⊗1) is not quasitriangular
    rep = run_suite(catalog("kS3-triv"), options=SuiteOptions(prop12_max_n=1))
    assert {c.section for c in rep.failures()} == {"double"}
    rep = run_suite(catalog("kS3-triv"),
                    options=SuiteOptions(prop12_max_n=1, skip=("double",)))
    assert rep.passed
