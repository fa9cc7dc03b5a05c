"""The full verification suite, section by section in dependency order.

Sections and what they need to have passed first::

    hopf ─ sqt ─┬─ propositions
                ├─ modules ─┬─ braiding
                │           └─ rigidity
                ├─ double
                └─ drinfeld

A section whose prerequisite failed is reported as a single skipped entry.
Sections run sequentially, so the report order is fixed and two runs with
the same options produce identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .double import (DoubleError, build_double, check_antipode_formula, check_counit,
                     check_example_212, check_twisting_map, double_module_equivalence)
from .drinfeld import drinfeld_report
from .hopf import check_hopf_axioms, check_semicocommutative_s2, is_semicocommutative
from .modules import (LEFT, LEFT_RIGHT, RIGHT, RIGHT_LEFT, check_braided_category,
                      check_normal, check_rigidity, check_variant_braiding,
                      check_variant_transport, regular_module, regular_variant,
                      tensor_module, trivial_module)
from .report import INFO, SKIPPED, Check, Report, boolean
from .specfile import AlgebraSpec, ModuleSpec
from .sqt import (SqtStructure, check_nu_properties, check_prop12, check_prop13, check_prop19,
                  check_quasitriangular, check_semicocommutative_case, check_sqt, qybe_check,
                  transform_cop, transform_op, transform_tau_rinv)

SECTIONS = ("hopf", "sqt", "propositions", "modules", "braiding", "rigidity", "double",
            "drinfeld")
REQUIRES = {
    "hopf": (), "sqt": ("hopf",), "propositions": ("sqt",), "modules": ("sqt",),
    "braiding": ("modules",), "rigidity": ("modules",), "double": ("sqt",),
    "drinfeld": ("sqt",),
}


@dataclass
class SuiteOptions:
    prop12_max_n: int = 3
    seed: int = 0
    morphisms_per_pair: int = 5
    # reg⊗reg joins the braided-category set up to this dim(H)
    braid_tensor_max_dim: int = 6
    # the double is built up to this dim(H)
    double_max_dim: int = 8
    skip: tuple = dc_field(default_factory=tuple)


class _Run:
    def __init__(self, spec: AlgebraSpec, modules, options: SuiteOptions):
        self.spec, self.module_specs, self.opt = spec, list(modules or ()), options
        self.S: SqtStructure | None = None
        self.mods = []
        self.report = Report()
        self.ok = {}

    # -- sections ------------------------------------------------------------

    def hopf(self) -> Report:
        return check_hopf_axioms(self.spec.hopf(strict=False))

    def sqt(self) -> Report:
        H = self.spec.hopf(strict=True)
        R = self.spec.R if self.spec.R is not None else H.unit2
        rep = check_sqt(H, R)
        if self.spec.claims_quasitriangular:
            rep.extend(check_quasitriangular(H, R))
        if self.spec.claims_semicocommutative:
            ok, witness = is_semicocommutative(H)
            rep.add(boolean("Ad lands in H⊗Z(H)", "intro (semicocommutative)", ok, witness))
            rep.add(check_semicocommutative_s2(H))
        if rep.passed:
            self.S = SqtStructure(H, R, name=self.spec.name, check=False,
                                  claims_quasitriangular=self.spec.claims_quasitriangular)
        return rep

    def propositions(self) -> Report:
        S = self.S
        rep = Report()
        rep.extend(check_prop13(S))
        rep.add(qybe_check(S))
        for n in range(1, self.opt.prop12_max_n + 1):
            rep.extend(check_prop12(S, n, max_n=max(self.opt.prop12_max_n, 3)))
        rep.extend(check_prop19(S))
        rep.extend(check_nu_properties(S))
        rep.extend(check_semicocommutative_case(S))
        for name, anchor, make in (("(H, τ(R⁻¹))", "Prop 1.10", transform_tau_rinv),
                                   ("(H^op, τ(R))", "Prop 1.11", transform_op),
                                   ("(H^cop, R⁻¹)", "Prop 1.11", transform_cop)):
            T = make(S, check=False)
            sub = check_sqt(T.H, T.R)
            rep.add(boolean(f"{name} passes check_sqt", anchor, sub.passed,
                            {"failed": [c.name for c in sub.failures()]}))
        return rep

    def modules(self) -> Report:
        S = self.S
        rep = Report()
        k, reg = trivial_module(S), regular_module(S)
        self.mods = [k, reg]
        if S.dim <= self.opt.braid_tensor_max_dim:
            self.mods.append(tensor_module(reg, reg))
        for ms in self.module_specs:
            self.mods.append(ms.module(S))
        for M in self.mods:
            for chk in check_normal(M):
                chk.name = f"{M.name}: {chk.name}"
                rep.add(chk)
        for variant in (LEFT, RIGHT, RIGHT_LEFT):
            M = regular_variant(S, variant)
            for chk in check_normal(M):
                chk.name = f"reg ({variant}): {chk.name}"
                rep.add(chk)
        rep.extend(check_variant_transport(S))
        return rep

    def braiding(self) -> Report:
        S = self.S
        lr = [M for M in self.mods if M.variant == LEFT_RIGHT]
        rep = check_braided_category(S, lr, seed=self.opt.seed,
                                     morphisms_per_pair=self.opt.morphisms_per_pair)
        for variant in (LEFT, RIGHT, RIGHT_LEFT):
            rep.extend(check_variant_braiding(S, variant, transported=True))
            literal = check_variant_braiding(S, variant, transported=False)
            bad = literal.failures()
            rep.add(Check(f"{variant}: literal Δ tensor product", "Cor 2.7 (literal reading)",
                          INFO, detail=(f"{len(bad)} of {len(literal)} checks fail"
                                        if bad else "all checks hold")))
        return rep

    def rigidity(self) -> Report:
        rep = Report()
        for M in self.mods:
            if M.variant != LEFT_RIGHT:
                continue
            for chk in check_rigidity(M):
                chk.name = f"{M.name}: {chk.name}"
                rep.add(chk)
        return rep

    def double(self) -> Report:
        S = self.S
        if S.dim > self.opt.double_max_dim:
            rep = Report()
            rep.add(Check("double", "Thm 2.11", SKIPPED,
                          detail=f"dim(H) = {S.dim} > {self.opt.double_max_dim}"))
            return rep
        try:
            D = build_double(S)
        except DoubleError as exc:
            return exc.report
        rep = Report().extend(D.report)
        rep.add(check_counit(D))
        rep.add(check_antipode_formula(D))
        rep.extend(check_twisting_map(D))
        if S.claims_quasitriangular:
            rep.add(check_example_212(D))
        for M in (trivial_module(S), regular_module(S)):
            _, sub = double_module_equivalence(D, M)
            for chk in sub:
                chk.name = f"{M.name}: {chk.name}"
                rep.add(chk)
        return rep

    def drinfeld(self) -> Report:
        return drinfeld_report(self.S)

    # -- driver --------------------------------------------------------------

    def run(self) -> Report:
        for section in SECTIONS:
            if section in self.opt.skip:
                self._skip(section, "skipped on request")
                continue
            missing = [r for r in REQUIRES[section] if not self.ok.get(r)]
            if missing:
                self._skip(section, f"requires {', '.join(missing)}")
                continue
            rep = getattr(self, section)()
            self.ok[section] = rep.passed
            self.report.extend(rep.tag(section))
        return self.report

    def _skip(self, section: str, why: str):
        self.ok[section] = False
        self.report.add(Check(section, "suite", SKIPPED, detail=why, section=section))


def run_suite(spec: AlgebraSpec, modules: list[ModuleSpec] | None = None,
              options: SuiteOptions | None = None) -> Report:
    """Every checker on one algebra file, gated by section dependencies."""
    return _Run(spec, modules, options or SuiteOptions()).run()


__all__ = ["SECTIONS", "REQUIRES", "SuiteOptions", "run_suite"]
