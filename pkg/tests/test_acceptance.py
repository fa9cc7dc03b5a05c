"""Acceptance criteria 1-11, exact (zero tolerance).

Each test records one PASS/FAIL line, printed under "acceptance criteria"
in the pytest summary.
"""

import re
import time
from fractions import Fraction

import pytest

from conftest import record_criterion
from sqtkit.catalog import braiding_set, catalog_names, negative_control, structure
from sqtkit.double import build_double, check_twisting_map, example_213_table
from sqtkit.drinfeld import compute_drinfeld, drinfeld_report
from sqtkit.field import QQ
from sqtkit.groups import group_by_name
from sqtkit.hopf import check_hopf_axioms
from sqtkit.modules import check_braided_category, check_rigidity
from sqtkit.report import FAIL
from sqtkit.sqt import (check_prop12, check_prop13, check_quasitriangular, check_sqt,
                        qybe_check, tensor_structure, transform_cop, transform_op,
                        transform_tau_rinv)
from sqtkit.tensor import Tensor

CATALOG = catalog_names()
GROUP_ALGEBRAS = [n for n in CATALOG if n.endswith("-triv")]
DUALS = [n for n in CATALOG if n.endswith("-dual") and "-x-" not in n]


@pytest.fixture(scope="module")
def structures():
    return {name: structure(name) for name in CATALOG}


def _summary(failures):
    return "all exact" if not failures else f"failing: {failures[:3]}"


def test_criterion_01_axiom_suite():
    assert len(GROUP_ALGEBRAS) == 7 and len(DUALS) == 7 and len(CATALOG) == 17
    t0 = time.perf_counter()
    failures = []
    for name in CATALOG:
        S = structure(name)
        for rep in (check_hopf_axioms(S.H), check_sqt(S.H, S.R)):
            failures += [f"{name}: {c.name}" for c in rep.failures()]
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    record_criterion(1, ok, f"Hopf + SQT axioms on {len(CATALOG)} catalog structures, "
                            f"{_summary(failures)}, {elapsed:.1f} s (< 60 s)")
    assert ok


def test_criterion_02_prop13_and_qybe(structures):
    failures = []
    for name, S in structures.items():
        failures += [f"{name}: {c.name}" for c in check_prop13(S).failures()]
        if not qybe_check(S).ok:
            failures.append(f"{name}: QYBE")
    names = {c.name for c in check_prop13(structures["kC2-Rminus"])}
    assert {"(ε⊗H)(R) = 1", "(S⊗H)(R) = R⁻¹", "(S⊗S)(R) = R"} <= names
    record_criterion(2, not failures, f"Prop 1.3 and QYBE on all {len(structures)} structures, "
                                      f"{_summary(failures)}")
    assert not failures


def test_criterion_03_prop12(structures):
    failures, count = [], 0
    for name in ("kC2-Rminus", "kS3-triv"):
        for n in (2, 3):
            rep = check_prop12(structures[name], n)
            count += len(rep)
            failures += [f"{name}: {c.name}" for c in rep.failures()]
    record_criterion(3, not failures, f"Prop 1.2 at n = 2, 3 on kC2-R⁻ and (k[S3], 1⊗1), "
                                      f"{count} identities, {_summary(failures)}")
    assert not failures


def test_criterion_04_nu_on_rminus(structures):
    S = structures["kC2-Rminus"]
    d = S.dim
    ok = True
    for h in range(d):
        nu_h = S.nu.take(0, h)
        expected = Tensor.from_sparse(QQ, (d, d), [((h, S.H.labels.index("1")), 1)])
        ok &= nu_h == expected
    record_criterion(4, ok, "ν(h) = h⊗1 on kC2-R⁻ for every basis h")
    assert ok


def test_criterion_05_braided_category(structures):
    t0 = time.perf_counter()
    failures, summary = [], []
    for name in ("kC2-Rminus", "kS3-triv"):
        S = structures[name]
        mods = braiding_set(S)
        assert [M.name for M in mods] == ["k", "reg", "reg⊗reg"]
        rep = check_braided_category(S, mods, seed=0, morphisms_per_pair=5)
        failures += [f"{name}: {c.name}" for c in rep.failures()]
        kinds = {re.sub(r" \(.*| #\d+$", "", c.name) for c in rep}
        assert {"hexagon c", "Yang–Baxter", "c⁻¹c = id", "cc⁻¹ = id"} <= {
            k.split("(")[0].strip() for k in kinds} | kinds
        assert any(c.anchor == "Remark 2.6" for c in rep)
        natural = [c for c in rep if c.name.startswith("naturality #")]
        pairs = len(mods) ** 2
        assert len(natural) >= 5 * pairs
        summary.append(f"{name}: {len(rep)} checks")
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 120
    record_criterion(5, ok, f"hexagons, naturality (seed 0, 5/pair), Remark 2.6 inverse, "
                            f"Yang–Baxter; {', '.join(summary)}, {_summary(failures)}, "
                            f"{elapsed:.1f} s (< 120 s)")
    assert ok


def test_criterion_06_rigidity(structures):
    failures, count = [], 0
    for name in ("kC2-Rminus", "kS3-triv"):
        for M in braiding_set(structures[name]):
            rep = check_rigidity(M)
            count += len(rep)
            failures += [f"{name}/{M.name}: {c.name}" for c in rep.failures()]
    record_criterion(6, not failures, f"snake equations and ev/coev (co)linearity for duals "
                                      f"of {{k, reg, reg⊗reg}}, {count} checks, "
                                      f"{_summary(failures)}")
    assert not failures


def test_criterion_07_double_of_s3_dual(structures):
    D = build_double(structures["kS3-dual"])
    hopf = check_hopf_axioms(D.carrier)
    sqt = check_sqt(D.carrier, D.Tmatrix)
    qt = check_quasitriangular(D.carrier, D.Tmatrix)
    ex = example_213_table(group_by_name("S3"))
    ok = (D.dim == 36 and hopf.passed and sqt.passed and qt.passed
          and len(ex.matching) == 1 and ex.mismatches[ex.matching[0]] == 0)
    record_criterion(7, ok, f"k[S3]*⋈k[S3] is {D.dim}-dim, Hopf {hopf.passed}, QT "
                            f"{sqt.passed and qt.passed}; Example 2.13 matching orientation "
                            f"{ex.matching} (0 of {36 * 36} products differ)")
    assert ok


def test_criterion_08_twisting_map(structures):
    failures, count = [], 0
    for name in ("kC2-triv", "kC2-Rminus"):
        rep = check_twisting_map(build_double(structures[name]))
        chi = [c for c in rep if c.name.startswith("χ")]
        assert len(chi) == 4
        count += len(chi)
        failures += [f"{name}: {c.name}" for c in rep.failures()]
    record_criterion(8, not failures, f"twisting-map conditions on the doubles of (k[C2], 1⊗1) "
                                      f"and kC2-R⁻, {count} conditions, {_summary(failures)}")
    assert not failures


def test_criterion_09_drinfeld(structures):
    failures = []
    for name, S in structures.items():
        failures += [f"{name}: {c.name}" for c in drinfeld_report(S).failures()]
    # hand expansion: u = S(R2)R1 = ½(1 + g + g − 1) = g
    S = structures["kC2-Rminus"]
    g = S.H.labels.index("g")
    hand = [Fraction(0)] * 2
    for (i, j), v in S.R.nonzero():
        hand[(i + j) % 2] += v                      # S(g^j) g^i = g^(i+j) in k[C2]
    u = compute_drinfeld(S).u
    u_is_g = u == Tensor.basis(QQ, (2,), (g,)) and hand == u.entries()
    ok = not failures and u_is_g
    record_criterion(9, ok, f"Section 3 checks on all {len(structures)} structures, "
                            f"{_summary(failures)}; u = g on kC2-R⁻: {u_is_g}")
    assert ok


def test_criterion_10_transforms(structures):
    failures = []
    for name, S in structures.items():
        for make in (transform_tau_rinv, transform_op, transform_cop):
            T = make(S, check=False)
            failures += [f"{make.__name__}({name}): {c.name}" for c in check_sqt(T.H, T.R).failures()]
    pairs = [("kC2-Rminus", "kS3-dual"), ("kC2-Rminus", "kC2-Rminus"), ("kC3-triv", "kQ8-dual")]
    for a, b in pairs:
        T = tensor_structure(structures[a], structures[b], check=False)
        failures += [f"{a}⊗{b}: {c.name}" for c in check_sqt(T.H, T.R).failures()]
    record_criterion(10, not failures, f"check_sqt on τ(R⁻¹), op, cop of every structure and "
                                       f"{len(pairs)} tensor products, {_summary(failures)}")
    assert not failures


def test_criterion_11_negative_controls():
    expected = {
        "bad-antipode": ("antipode left", "hopf"),
        "bad-R-singular": ("R invertible", "sqt"),
        "bad-R-g1": ("condition (2)", "sqt"),
    }
    results = []
    ok = True
    for name, (check_name, stage) in expected.items():
        spec = negative_control(name)
        H = spec.hopf(strict=False)
        rep = check_hopf_axioms(H) if stage == "hopf" else check_sqt(spec.hopf(strict=True), spec.R)
        chk = rep[check_name]
        this = chk.status == FAIL and bool(chk.witness)
        if name == "bad-R-g1":
            # the failure is condition (2), not (1)
            this &= rep["condition (1)"].ok and rep.failures()[0].name == "condition (2)"
        ok &= this
        results.append(f"{name} → {check_name} {chk.witness}")
    record_criterion(11, ok, "; ".join(results))
    assert ok
