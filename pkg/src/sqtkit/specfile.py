"""JSON file formats for algebras (with an optional R) and modules.

Scalars are strings in the declared field ("3/4", "-1", "5 mod 7") so no
value ever passes through a float. Structure maps are sparse lists of
``[index..., scalar]`` entries, written in row-major order:

.. code-block:: json

    {
      "format": "sqtkit-algebra/1",
      "name": "kC2-Rminus",
      "field": "QQ",
      "basis": ["1", "g"],
      "mul": [[0, 0, 0, "1"], ...],
      "unit": [[0, "1"]],
      "comul": [[0, 0, 0, "1"], ...],
      "counit": [[0, "1"], [1, "1"]],
      "antipode": [[0, 0, "1"], [1, 1, "1"]],
      "R": [[0, 0, "1/2"], ...],
      "claims_quasitriangular": true,
      "claims_semicocommutative": false
    }

A module file names its algebra and lists ``[h, row, col, scalar]``
entries of the action and coaction matrices (``[out, in]`` indexing).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .field import Field, FieldMismatch
from .hopf import HopfAlgebra
from .modules import VARIANTS, NormalModule
from .sparse import SparseMatrix
from .sqt import SqtStructure
from .tensor import Tensor

ALGEBRA_FORMAT = "sqtkit-algebra/1"
MODULE_FORMAT = "sqtkit-module/1"

# key -> number of index legs (each of size dim)
_MAPS = {"mul": 3, "unit": 1, "comul": 3, "counit": 1, "antipode": 2}


class SpecError(ValueError):
    """A file that does not parse; the message names the offending key/entry."""


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise SpecError(f"{where}: missing key {key!r}")
    return obj[key]


def _parse_entries(f: Field, raw, legs: int, bounds, where: str) -> Tensor:
    if not isinstance(raw, list):
        raise SpecError(f"{where}: expected a list of entries")
    items = []
    for n, entry in enumerate(raw):
        loc = f"{where}[{n}]"
        if not isinstance(entry, list) or len(entry) != legs + 1:
            raise SpecError(f"{loc}: expected {legs} indices and a scalar, got {entry!r}")
        *idx, value = entry
        for k, (i, b) in enumerate(zip(idx, bounds)):
            if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i < b:
                raise SpecError(f"{loc}: index {k} = {i!r} out of range 0..{b - 1}")
        if not isinstance(value, str):
            raise SpecError(f"{loc}: scalar must be a string, got {value!r}")
        try:
            items.append((tuple(idx), f.parse(value)))
        except (ValueError, ZeroDivisionError, FieldMismatch) as exc:
            raise SpecError(f"{loc}: {exc}") from None
    seen = set()
    for idx, _ in items:
        if idx in seen:
            raise SpecError(f"{where}: duplicate entry at {list(idx)}")
        seen.add(idx)
    return Tensor.from_sparse(f, tuple(bounds), items)


def _entries(t: Tensor) -> list:
    return [[*idx, t.field.format(v)] for idx, v in t.nonzero()]


def _load(text: str, what: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{what}: invalid JSON at line {exc.lineno} column {exc.colno}: "
                        f"{exc.msg}") from None
    if not isinstance(obj, dict):
        raise SpecError(f"{what}: top level must be an object")
    return obj


def _dump(obj: dict) -> str:
    """Canonical layout: one key per line, one sparse entry per line."""
    lines = ["{"]
    keys = list(obj)
    for n, key in enumerate(keys):
        value = obj[key]
        sep = "," if n < len(keys) - 1 else ""
        head = f"  {json.dumps(key)}: "
        if isinstance(value, list) and value and isinstance(value[0], list):
            body = ",\n".join(f"    {json.dumps(e, ensure_ascii=False)}" for e in value)
            lines.append(f"{head}[\n{body}\n  ]{sep}")
        else:
            lines.append(f"{head}{json.dumps(value, ensure_ascii=False)}{sep}")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass
class AlgebraSpec:
    name: str
    field: Field
    labels: list
    mul: Tensor
    unit: Tensor
    comul: Tensor
    counit: Tensor
    antipode: Tensor
    R: Tensor | None = None
    claims_quasitriangular: bool = False
    claims_semicocommutative: bool = False

    @property
    def dim(self) -> int:
        return len(self.labels)

    @classmethod
    def from_hopf(cls, H: HopfAlgebra, R: Tensor | None = None, *, name: str = "",
                  claims_quasitriangular: bool = False,
                  claims_semicocommutative: bool = False) -> "AlgebraSpec":
        return cls(name or H.name, H.field, list(H.labels), H.mul, H.unit, H.comul,
                   H.counit, H.antipode, R, claims_quasitriangular, claims_semicocommutative)

    @classmethod
    def from_structure(cls, S: SqtStructure, **flags) -> "AlgebraSpec":
        flags.setdefault("claims_quasitriangular", S.claims_quasitriangular)
        return cls.from_hopf(S.H, S.R, name=S.name, **flags)

    def hopf(self, *, strict: bool = False) -> HopfAlgebra:
        """The structure constants as a (possibly unverified) Hopf algebra."""
        return HopfAlgebra(self.field, self.labels, self.mul, self.unit, self.comul,
                           self.counit, self.antipode, name=self.name, strict=strict)

    def structure(self, *, check: bool = True) -> SqtStructure:
        """``(H, R)``; ``R`` defaults to ``1⊗1`` when the file has none."""
        H = self.hopf(strict=True)
        R = self.R if self.R is not None else H.unit2
        return SqtStructure(H, R, name=self.name, check=check,
                            claims_quasitriangular=self.claims_quasitriangular)

    def to_dict(self) -> dict:
        d = {"format": ALGEBRA_FORMAT, "name": self.name, "field": str(self.field),
             "basis": list(self.labels)}
        for key in _MAPS:
            d[key] = _entries(getattr(self, key))
        if self.R is not None:
            d["R"] = _entries(self.R)
        d["claims_quasitriangular"] = self.claims_quasitriangular
        d["claims_semicocommutative"] = self.claims_semicocommutative
        return d

    def to_json(self) -> str:
        return _dump(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict, where: str = "algebra") -> "AlgebraSpec":
        fmt = obj.get("format", ALGEBRA_FORMAT)
        if fmt != ALGEBRA_FORMAT:
            raise SpecError(f"{where}: unsupported format {fmt!r}")
        try:
            f = Field.from_string(str(_require(obj, "field", where)))
        except ValueError as exc:
            raise SpecError(f"{where}.field: {exc}") from None
        labels = _require(obj, "basis", where)
        if not isinstance(labels, list) or not labels:
            raise SpecError(f"{where}.basis: expected a non-empty list of labels")
        d = len(labels)
        if "dim" in obj and obj["dim"] != d:
            raise SpecError(f"{where}.dim: {obj['dim']!r} does not match {d} basis labels")
        maps = {key: _parse_entries(f, _require(obj, key, where), legs, (d,) * legs,
                                    f"{where}.{key}")
                for key, legs in _MAPS.items()}
        R = None
        if obj.get("R") is not None:
            R = _parse_entries(f, obj["R"], 2, (d, d), f"{where}.R")
        flags = {}
        for key in ("claims_quasitriangular", "claims_semicocommutative"):
            value = obj.get(key, False)
            if not isinstance(value, bool):
                raise SpecError(f"{where}.{key}: expected true or false")
            flags[key] = value
        return cls(str(obj.get("name", "")), f, [str(x) for x in labels], R=R, **maps, **flags)

    @classmethod
    def from_json(cls, text: str, where: str = "algebra") -> "AlgebraSpec":
        return cls.from_dict(_load(text, where), where)


@dataclass
class ModuleSpec:
    name: str
    algebra: str
    variant: str
    dim: int
    action: list = dc_field(default_factory=list)    # [h, row, col, scalar]
    coaction: list = dc_field(default_factory=list)  # [a, row, col, scalar]

    @classmethod
    def from_module(cls, M: NormalModule, algebra: str = "") -> "ModuleSpec":
        f = M.field

        def entries(mats):
            return [[h, r, c, f.format(v)] for h, m in enumerate(mats) for (r, c), v in m.items()]

        return cls(M.name, algebra or M.parent.name, M.variant, M.dim,
                   entries(M.action), entries(M.coaction))

    def module(self, S: SqtStructure) -> NormalModule:
        """Instantiate over ``S``; indices and scalars are validated here."""
        f, d, m = S.field, S.dim, self.dim
        mats = {}
        for key in ("action", "coaction"):
            t = _parse_entries(f, getattr(self, key), 3, (d, m, m), f"module.{key}")
            mats[key] = [SparseMatrix.from_tensor(t.take(0, h)) for h in range(d)]
        return NormalModule(S, mats["action"], mats["coaction"], self.variant, self.name)

    def to_dict(self) -> dict:
        return {"format": MODULE_FORMAT, "name": self.name, "algebra": self.algebra,
                "variant": self.variant, "dim": self.dim,
                "action": self.action, "coaction": self.coaction}

    def to_json(self) -> str:
        return _dump(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict, where: str = "module") -> "ModuleSpec":
        fmt = obj.get("format", MODULE_FORMAT)
        if fmt != MODULE_FORMAT:
            raise SpecError(f"{where}: unsupported format {fmt!r}")
        variant = obj.get("variant", "left-right")
        if variant not in VARIANTS:
            raise SpecError(f"{where}.variant: {variant!r} is not one of {', '.join(VARIANTS)}")
        dim = _require(obj, "dim", where)
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
            raise SpecError(f"{where}.dim: expected a positive integer")
        for key in ("action", "coaction"):
            if not isinstance(_require(obj, key, where), list):
                raise SpecError(f"{where}.{key}: expected a list of entries")
        return cls(str(obj.get("name", "")), str(obj.get("algebra", "")), variant, dim,
                   obj["action"], obj["coaction"])

    @classmethod
    def from_json(cls, text: str, where: str = "module") -> "ModuleSpec":
        return cls.from_dict(_load(text, where), where)
