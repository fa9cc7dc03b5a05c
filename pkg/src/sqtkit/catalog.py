"""Built-in structures and module fixtures.

Names:

* ``k<G>-triv``   — ``(k[G], 1⊗1)`` for G in C2, C3, C4, C2xC2, S3, D4, Q8
* ``k<G>-dual``   — ``(k[G]*, 1⊗1)``
* ``kC2-Rminus``  — ``(k[C2], ½(1⊗1 + 1⊗g + g⊗1 − g⊗g))``, quasitriangular;
  needs characteristic ≠ 2
* ``A-x-B``       — the tensor product structure of two catalog entries

Negative controls (deliberately broken, not in :func:`catalog_names`):

* ``bad-antipode``  — k[C3] with ``S = id``; the antipode axiom fails
* ``bad-R-singular`` — k[C2] with ``R = (1+g)⊗(1+g)``, which has no inverse
* ``bad-R-g1``      — k[C2] with ``R = g⊗1``; invertible and satisfies (1),
  but ``(Δ⊗id)(R) = R13 R23`` (condition (2)) fails
"""

from __future__ import annotations

from .field import QQ, Field
from .groups import GROUPS, FiniteGroup, dual_group_algebra, group_algebra, group_by_name
from .hopf import is_semicocommutative
from .modules import (group_normal_module, regular_module, tensor_module,
                      trivial_module)
from .specfile import AlgebraSpec, ModuleSpec
from .sqt import SqtStructure, tensor_structure
from .tensor import Tensor

TENSOR_SEP = "-x-"
RMINUS = "kC2-Rminus"
# the two tensor products that ship with the catalog
TENSOR_ENTRIES = (f"{RMINUS}{TENSOR_SEP}{RMINUS}", f"{RMINUS}{TENSOR_SEP}kS3-dual")


class CatalogError(ValueError):
    pass


NEGATIVE_CONTROLS = ("bad-antipode", "bad-R-singular", "bad-R-g1")


def group_names() -> list:
    return list(GROUPS)


def catalog_names() -> list:
    names = [f"k{g}-triv" for g in GROUPS] + [f"k{g}-dual" for g in GROUPS] + [RMINUS]
    return names + list(TENSOR_ENTRIES)


def _rminus(field: Field) -> SqtStructure:
    if field.characteristic == 2:
        raise CatalogError(f"{RMINUS} needs 1/2, which does not exist over {field}")
    H = group_algebra(group_by_name("C2"), field)
    R = Tensor.from_entries(field, [["1/2", "1/2"], ["1/2", "-1/2"]])
    return SqtStructure(H, R, name=RMINUS, claims_quasitriangular=True)


def _split(name: str):
    if name.startswith("k") and name.endswith(("-triv", "-dual")):
        g, kind = name[1:-5], name[-4:]
        if g in GROUPS:
            return g, kind
    return None


def structure(name: str, field: Field = QQ) -> SqtStructure:
    """The catalog entry ``name`` as a verified structure."""
    if TENSOR_SEP in name:
        left, right = name.split(TENSOR_SEP, 1)
        S = tensor_structure(structure(left, field), structure(right, field))
        S.name = name
        return S
    if name == RMINUS:
        return _rminus(field)
    if name in NEGATIVE_CONTROLS:
        raise CatalogError(f"{name} is a negative control; use negative_control()")
    parts = _split(name)
    if parts is None:
        raise CatalogError(f"unknown catalog entry {name!r}; known: {', '.join(catalog_names())}")
    g, kind = parts
    G = group_by_name(g)
    H = group_algebra(G, field) if kind == "triv" else dual_group_algebra(G, field)
    return SqtStructure(H, H.unit2, name=name)


def catalog(name: str, field: Field = QQ) -> AlgebraSpec:
    """The catalog entry as a file model, with its claim flags set."""
    if name in NEGATIVE_CONTROLS:
        return negative_control(name, field)
    S = structure(name, field)
    return AlgebraSpec.from_structure(
        S, claims_semicocommutative=S.is_trivial() and is_semicocommutative(S.H)[0])


def negative_control(name: str, field: Field = QQ) -> AlgebraSpec:
    """One of the deliberately corrupted specs in ``NEGATIVE_CONTROLS``."""
    if name not in NEGATIVE_CONTROLS:
        raise CatalogError(f"unknown negative control {name!r}; known: "
                           f"{', '.join(NEGATIVE_CONTROLS)}")
    if name == "bad-antipode":
        H = group_algebra(group_by_name("C3"), field)
        return AlgebraSpec(name, field, list(H.labels), H.mul, H.unit, H.comul, H.counit,
                           H.identity)
    H = group_algebra(group_by_name("C2"), field)
    entries = [[1, 1], [1, 1]] if name == "bad-R-singular" else [[0, 0], [1, 0]]
    return AlgebraSpec.from_hopf(H, Tensor.from_entries(field, entries), name=name)


def _group_of(name: str) -> FiniteGroup | None:
    parts = _split(name)
    return group_by_name(parts[0]) if parts else None


def module_fixtures(S: SqtStructure) -> dict:
    """Standard left-right normal modules of a catalog structure, by name.

    Always ``k`` and ``reg``; for group entries also the graded examples
    of the semicocommutative case: over ``k[G]`` the sign module of C2
    graded by ``g`` and the trivial module graded by each central element;
    over ``k[G]*`` the conjugation module ``y·x = yxy⁻¹`` graded by ``x``.
    """
    mods = {"k": trivial_module(S), "reg": regular_module(S)}
    G = _group_of(S.name)
    if G is None:
        return mods
    n = G.order
    if S.name.endswith("-dual"):
        rep = {G.labels[y]: [[1 if G.conj(y, c) == r else 0 for c in range(n)] for r in range(n)]
               for y in range(n)}
        mods["conj"] = group_normal_module(S, G, list(G.labels), rep, dual=True, name="conj")
        return mods
    for z in range(n):
        if z != G.identity and G.is_central(z):
            label = G.labels[z]
            mods[f"k_{label}"] = group_normal_module(
                S, G, [label], {g: [[1]] for g in G.labels}, name=f"k_{label}")
    if G.name == "C2":
        mods["sign_g"] = group_normal_module(S, G, ["g"], {"1": [[1]], "g": [[-1]]},
                                             name="sign_g")
    return mods


def catalog_modules(name: str, field: Field = QQ) -> dict:
    """Module fixtures of a catalog entry as file models."""
    S = structure(name, field)
    return {k: ModuleSpec.from_module(M, name) for k, M in module_fixtures(S).items()}


def braiding_set(S: SqtStructure) -> list:
    """``{k, reg, reg⊗reg}``, the module set used for the braided-category checks."""
    k, reg = trivial_module(S), regular_module(S)
    return [k, reg, tensor_module(reg, reg)]


__all__ = [
    "CatalogError", "catalog", "catalog_names", "structure", "module_fixtures",
    "catalog_modules", "braiding_set", "group_names", "TENSOR_ENTRIES",
    "NEGATIVE_CONTROLS", "negative_control",
]
