"""The Drinfeld element ``u = S(R2) R1`` and its properties (Section 3)."""

from __future__ import annotations

from dataclasses import dataclass

from .hopf import in_center
from .report import FAIL, INFO, Check, Report, boolean, compare
from .sqt import SqtStructure, invert_in_tensor_square, mul2
from .sweedler import sweedler
from .tensor import Tensor, einsum

U_FORMULA = "S(R2) R1"
U_INV_FORMULA = "R2 S2(R1)"
T_FORMULA = "R2 h2 R'2 S(h1) S(R1) h3 R'1"


class DrinfeldError(ValueError):
    pass


@dataclass
class DrinfeldData:
    """``u``, its closed-form inverse, the map ``T = μ∘ν`` and ``R21 R``.

    ``Tmap`` is stored input-leg first, like the antipode.
    ``R21R_inv`` is ``None`` when ``R21 R`` has no inverse in ``H⊗H``.
    """

    parent: SqtStructure
    u: Tensor
    u_inv: Tensor
    Tmap: Tensor
    R21R: Tensor
    R21R_inv: Tensor | None

    @property
    def H(self):
        return self.parent.H


def _prod(H, x: Tensor, y: Tensor) -> Tensor:
    return einsum("a,b,abc->c", x, y, H.mul)


def _apply(matrix: Tensor, x: Tensor) -> Tensor:
    return einsum("a,ab->b", x, matrix)


def compute_drinfeld(S: SqtStructure) -> DrinfeldData:
    """Def 3.1 and Prop 3.2; the inverse is verified on both sides."""
    H = S.H
    u = sweedler(H, U_FORMULA, R=S.R)
    u_inv = sweedler(H, U_INV_FORMULA, R=S.R)
    one = H.unit
    for side, prod in (("u·u⁻¹", _prod(H, u, u_inv)), ("u⁻¹·u", _prod(H, u_inv, u))):
        if prod != one:
            raise DrinfeldError(f"{S.name}: {side} ≠ 1 for u⁻¹ = R2 S²(R1)")
    Tmap = einsum("hab,abc->hc", S.nu, H.mul)
    R21R = mul2(H, S.R.transpose((1, 0)), S.R)
    return DrinfeldData(S, u, u_inv, Tmap, R21R, invert_in_tensor_square(H, R21R))


def check_prop32(D: DrinfeldData) -> Report:
    H = D.H
    rep = Report()
    rep.add(compare("u·u⁻¹ = 1", "Prop 3.2", _prod(H, D.u, D.u_inv), H.unit))
    rep.add(compare("u⁻¹·u = 1", "Prop 3.2", _prod(H, D.u_inv, D.u), H.unit))
    rep.add(compare("T = μ∘ν", "Prop 3.2", D.Tmap, sweedler(H, T_FORMULA, R=D.parent.R)))
    conj = einsum("a,hx,axy,b,ybz->hz", D.u, D.Tmap, H.mul, D.u_inv, H.mul)
    rep.add(compare("S²(h) = u T(h) u⁻¹", "Prop 3.2", H.antipode_sq, conj))
    return rep


def check_s2_conjugation(D: DrinfeldData) -> bool:
    """``S² = u·T(−)·u⁻¹`` entrywise."""
    return check_prop32(D)["S²(h) = u T(h) u⁻¹"].ok


def _delta(H, x: Tensor) -> Tensor:
    return einsum("a,abc->bc", x, H.comul)


def check_prop33(D: DrinfeldData) -> Report:
    """``ε(u) = 1`` and the coproducts of ``u``, ``S(u)`` and ``uS(u)``."""
    H = D.H
    rep = Report()
    rep.add(compare("ε(u) = 1", "Prop 3.3", einsum("a,a->", D.u, H.counit),
                    Tensor.scalar_one(H.field)))
    if D.R21R_inv is None:
        rep.add(Check("R21R invertible", "Prop 3.3", FAIL,
                      {"reason": "hypothesis fails: R21R has no inverse in H⊗H"}))
        return rep
    X = D.R21R_inv
    X2 = mul2(H, X, X)
    Su = _apply(H.antipode, D.u)
    uSu = _prod(H, D.u, Su)
    for name, x, inv, power in (("u", D.u, X, "⁻¹"), ("S(u)", Su, X, "⁻¹"),
                                ("uS(u)", uSu, X2, "⁻²")):
        xx = einsum("a,b->ab", x, x)
        lhs = _delta(H, x)
        rep.add(compare(f"Δ({name}) = (R21R){power}({name}⊗{name})", "Prop 3.3",
                        lhs, mul2(H, inv, xx)))
        rep.add(compare(f"Δ({name}) = ({name}⊗{name})(R21R){power}", "Prop 3.3",
                        lhs, mul2(H, xx, inv)))
    return rep


def check_prop34(D: DrinfeldData) -> Report:
    """``u``, ``S(u)`` and ``uS(u)`` are coinvariants of ν."""
    H, nu = D.H, D.parent.nu
    Su = _apply(H.antipode, D.u)
    rep = Report()
    for name, x in (("u", D.u), ("S(u)", Su), ("uS(u)", _prod(H, D.u, Su))):
        rep.add(compare(f"ν({name}) = {name}⊗1", "Prop 3.4", einsum("a,abc->bc", x, nu),
                        einsum("a,b->ab", x, H.unit)))
    return rep


def check_cor35(D: DrinfeldData) -> Report:
    H = D.H
    S2 = H.antipode_sq
    Su = _apply(H.antipode, D.u)
    rep = Report()
    rep.add(compare("S²(u) = u", "Cor 3.5", _apply(S2, D.u), D.u))
    rep.add(compare("S²(u⁻¹) = u⁻¹", "Cor 3.5", _apply(S2, D.u_inv), D.u_inv))
    rep.add(compare("uS(u) = S(u)u", "Cor 3.5", _prod(H, D.u, Su), _prod(H, Su, D.u)))
    holds = _apply(D.Tmap, D.u_inv) == D.u_inv
    rep.add(Check("T(u⁻¹) = u⁻¹", "Cor 3.5 (not claimed)", INFO,
                  detail="holds" if holds else "does not hold"))
    return rep


@dataclass
class Prop36:
    center: bool       # (1) S(u)u ∈ Z(H)
    commute: bool      # (2) S∘T = T∘S
    coactions: bool    # (3) μ∘ν = μ∘ν̃

    @property
    def consistent(self) -> bool:
        return self.center == self.commute == self.coactions


def evaluate_prop36(D: DrinfeldData) -> Prop36:
    H = D.H
    Su = _apply(H.antipode, D.u)
    S, Tm = H.antipode, D.Tmap
    return Prop36(
        in_center(H, _prod(H, Su, D.u)),
        einsum("ab,bc->ac", S, Tm) == einsum("ab,bc->ac", Tm, S),
        Tm == einsum("hab,abc->hc", D.parent.nu_tilde, H.mul),
    )


def check_prop36(D: DrinfeldData) -> Report:
    """Each of the three conditions as information; their equivalence as the check."""
    p = evaluate_prop36(D)
    rep = Report()
    for name, value in (("(1) S(u)u ∈ Z(H)", p.center), ("(2) S∘T = T∘S", p.commute),
                        ("(3) μ∘ν = μ∘ν̃", p.coactions)):
        rep.add(Check(name, "Prop 3.6", INFO, detail="holds" if value else "does not hold"))
    rep.add(boolean("(1) ⇔ (2) ⇔ (3)", "Prop 3.6", p.consistent,
                    {"(1)": p.center, "(2)": p.commute, "(3)": p.coactions}))
    return rep


def drinfeld_report(S: SqtStructure) -> Report:
    """Every Section 3 check on one structure."""
    try:
        D = compute_drinfeld(S)
    except DrinfeldError as exc:
        rep = Report()
        rep.add(Check("u invertible", "Prop 3.2", FAIL, {"reason": str(exc)}))
        return rep
    rep = Report()
    for part in (check_prop32, check_prop33, check_prop34, check_cor35, check_prop36):
        rep.extend(part(D))
    return rep


__all__ = [
    "DrinfeldData", "DrinfeldError", "Prop36", "compute_drinfeld", "check_prop32",
    "check_s2_conjugation", "check_prop33", "check_prop34", "check_cor35",
    "evaluate_prop36", "check_prop36", "drinfeld_report",
]
