"""Evaluate Sweedler-notation formulas as exact tensors.

A formula is a list of tensor legs separated by ``|``; each leg is a
product of factors written left to right. Factors:

``h``, ``h1`` .. ``hn``
    the input element and the Sweedler components of ``Δ^{n-1}(h)``
    (left-nested iteration, so the choice of bracketing is fixed).
``R1``, ``R2``, ``R'1``, ``R''2`` ...
    legs of a named two-leg element; each run of primes is an independent
    copy. Any name passed as a keyword works, not only ``R``.
``R1_1``, ``R1_2`` ...
    Sweedler components of ``Δ`` applied to that leg.
``S(x)``, ``S2(x)``, ``Sinv(x)``
    the antipode, its square, and its inverse applied to one factor.
``1``
    the unit (an empty leg is also the unit).

Every Sweedler component must be used exactly once. The result has one
leg for ``h`` (if the formula mentions it) followed by one leg per output.

>>> nu = sweedler(H, "R2 h2 R'2 | S(h1) S(R1) h3 R'1", R=R)   # doctest: +SKIP
"""

from __future__ import annotations

import re
import string

from .tensor import Tensor, einsum

_H_ATOM = re.compile(r"^h(\d*)$")
_ELEM_ATOM = re.compile(r"^([A-Za-z]+)('*)([12])(?:_(\d+))?$")
_FUNC = re.compile(r"^(S2|Sinv|S)\((.+)\)$")


class FormulaError(ValueError):
    pass


def _tokens(leg: str):
    return leg.split()


def sweedler(H, formula: str, **elements: Tensor) -> Tensor:
    letters = iter(string.ascii_letters)

    def fresh():
        try:
            return next(letters)
        except StopIteration:
            raise FormulaError(f"formula too large for einsum: {formula!r}") from None

    legs = [leg.strip() for leg in formula.split("|")]
    parsed = []  # per leg: list of (func, atom)
    for leg in legs:
        facs = []
        for tok in _tokens(leg):
            if tok == "1":
                continue
            m = _FUNC.match(tok)
            func, atom = (m.group(1), m.group(2)) if m else (None, tok)
            facs.append((func, atom))
        parsed.append(facs)

    # collect atoms
    h_idx = []
    copies = {}  # (name, primes) -> {leg: [sub indices]}
    for facs in parsed:
        for _, atom in facs:
            m = _H_ATOM.match(atom)
            if m:
                h_idx.append(int(m.group(1)) if m.group(1) else 0)
                continue
            m = _ELEM_ATOM.match(atom)
            if not m or m.group(1) not in elements:
                raise FormulaError(f"unknown factor {atom!r} in {formula!r}")
            key = (m.group(1), m.group(2))
            sub = int(m.group(4)) if m.group(4) else 0
            copies.setdefault(key, {}).setdefault(int(m.group(3)), []).append(sub)

    operands, subs = [], []
    atom_letter = {}
    h_letter = None
    if h_idx:
        if 0 in h_idx:
            if h_idx != [0]:
                raise FormulaError("'h' cannot be combined with Sweedler components")
            n = 1
            atoms = ["h"]
        else:
            n = max(h_idx)
            if sorted(h_idx) != list(range(1, n + 1)):
                raise FormulaError(f"h components must be h1..h{n}, each once: {formula!r}")
            atoms = [f"h{i}" for i in range(1, n + 1)]
        h_letter = fresh()
        outs = [fresh() for _ in atoms]
        operands.append(H.delta(n - 1))
        subs.append(h_letter + "".join(outs))
        atom_letter.update(zip(atoms, outs))

    for (name, primes), leg_map in copies.items():
        a, b = fresh(), fresh()
        operands.append(elements[name])
        subs.append(a + b)
        for leg, letter in ((1, a), (2, b)):
            used = leg_map.get(leg)
            if used is None:
                raise FormulaError(f"leg {leg} of {name}{primes} unused in {formula!r}")
            base = f"{name}{primes}{leg}"
            if used == [0]:
                atom_letter[base] = letter
                continue
            m = max(used)
            if sorted(used) != list(range(1, m + 1)):
                raise FormulaError(f"{base}_k components must be 1..{m}, each once")
            outs = [fresh() for _ in range(m)]
            operands.append(H.delta(m - 1))
            subs.append(letter + "".join(outs))
            for k, o in enumerate(outs, 1):
                atom_letter[f"{base}_{k}"] = o

    func_mats = {"S": lambda: H.antipode, "S2": lambda: H.antipode_sq, "Sinv": lambda: H.antipode_inv}
    out_letters = []
    for facs in parsed:
        chain = []
        for func, atom in facs:
            x = atom_letter[atom]
            if func:
                y = fresh()
                operands.append(func_mats[func]())
                subs.append(x + y)
                x = y
            chain.append(x)
        if not chain:
            x = fresh()
            operands.append(H.unit)
            subs.append(x)
            chain = [x]
        acc = chain[0]
        for nxt in chain[1:]:
            y = fresh()
            operands.append(H.mul)
            subs.append(acc + nxt + y)
            acc = y
        if acc in out_letters or acc == h_letter:
            # a bare factor reused as output needs its own leg
            y = fresh()
            operands.append(H.identity)
            subs.append(acc + y)
            acc = y
        out_letters.append(acc)

    out = (h_letter or "") + "".join(out_letters)
    return einsum(",".join(subs) + "->" + out, *operands)
