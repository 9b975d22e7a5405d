"""Structure-file serialization and the registry of built-in examples.

Files are JSON with every rational rendered as a string ("p/q" or a bare
integer).  Multiplication constants are nested as ``mul[i][j][k]`` and
comultiplication constants as ``comul[k][i][j]``; the mandatory
``convention`` field is pinned to "columns-are-images" so a file states its
own matrix convention.  Round trips are lossless: parse(serialize(x)) == x.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .algebra import HomAlgebra
from .bialgebra import HomBialgebra, HomHopf
from .coalgebra import HomCoalgebra
from .rational import ONE, rat, rat_str
from .tensors import ComulTensor, LinearMap, MulTensor, Vector

CONVENTION = "columns-are-images"

Structure = HomAlgebra | HomCoalgebra | HomBialgebra | HomHopf


class ParseError(ValueError):
    """Malformed structure file: carries a message naming the failing field."""


def _scalar(value, field: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ParseError(f"{field}: expected an exact rational string, got {value!r}")
    try:
        return rat(value)
    except ValueError as exc:
        raise ParseError(f"{field}: {exc}") from exc


def _grid(data, dim: int, field: str) -> list[list[Fraction]]:
    if not isinstance(data, list) or len(data) != dim:
        raise ParseError(f"{field}: expected {dim} rows")
    out = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"{field}[{i}]: expected {dim} entries")
        out.append([_scalar(v, f"{field}[{i}][{j}]") for j, v in enumerate(row)])
    return out


def _cube(data, dim: int, field: str) -> list[list[list[Fraction]]]:
    if not isinstance(data, list) or len(data) != dim:
        raise ParseError(f"{field}: expected {dim} planes")
    return [
        _grid(plane, dim, f"{field}[{i}]") for i, plane in enumerate(data)
    ]


def _vector(data, dim: int, field: str) -> Vector:
    if not isinstance(data, list) or len(data) != dim:
        raise ParseError(f"{field}: expected {dim} entries")
    return Vector(_scalar(v, f"{field}[{i}]") for i, v in enumerate(data))


_KIND_FIELDS = {
    "algebra": ({"mul", "alpha"}, {"unit"}),
    "coalgebra": ({"comul", "beta"}, {"counit"}),
    "bialgebra": ({"mul", "alpha", "unit", "comul", "beta", "counit"}, set()),
    "hopf": ({"mul", "alpha", "unit", "comul", "beta", "counit", "antipode"}, set()),
}
_COMMON_FIELDS = {"kind", "dim", "convention", "params"}


def parse_structure_file(text: str) -> tuple[Structure, dict[str, Fraction]]:
    """Parse a structure file; returns the structure and its recorded
    parameter bindings (empty when the file carries none)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ParseError("top level must be a JSON object")

    kind = data.get("kind")
    if kind not in _KIND_FIELDS:
        raise ParseError(f"kind: expected one of {sorted(_KIND_FIELDS)}, got {kind!r}")
    dim = data.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise ParseError(f"dim: expected a positive integer, got {dim!r}")
    if data.get("convention") != CONVENTION:
        raise ParseError(f'convention: must be "{CONVENTION}"')

    required, optional = _KIND_FIELDS[kind]
    allowed = required | optional | _COMMON_FIELDS
    for key in data:
        if key not in allowed:
            raise ParseError(f"unexpected field {key!r} for kind {kind!r}")
    for key in required:
        if key not in data:
            raise ParseError(f"missing field {key!r} for kind {kind!r}")

    params: dict[str, Fraction] = {}
    raw_params = data.get("params", {})
    if not isinstance(raw_params, dict):
        raise ParseError("params: expected an object")
    for name, value in raw_params.items():
        params[name] = _scalar(value, f"params[{name}]")

    algebra = None
    if "mul" in data:
        algebra = HomAlgebra(
            mul=MulTensor(_cube(data["mul"], dim, "mul")),
            alpha=LinearMap(_grid(data["alpha"], dim, "alpha")),
            unit=None if data.get("unit") is None else _vector(data["unit"], dim, "unit"),
        )
    coalgebra = None
    if "comul" in data:
        coalgebra = HomCoalgebra(
            comul=ComulTensor(_cube(data["comul"], dim, "comul")),
            beta=LinearMap(_grid(data["beta"], dim, "beta")),
            counit=None if data.get("counit") is None
            else _vector(data["counit"], dim, "counit"),
        )

    if kind == "algebra":
        assert algebra is not None
        return algebra, params
    if kind == "coalgebra":
        assert coalgebra is not None
        return coalgebra, params
    assert algebra is not None and coalgebra is not None
    try:
        bialgebra = HomBialgebra(algebra=algebra, coalgebra=coalgebra)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    if kind == "bialgebra":
        return bialgebra, params
    try:
        hopf = HomHopf(
            bialgebra=bialgebra,
            antipode=LinearMap(_grid(data["antipode"], dim, "antipode")),
        )
    except ValueError as exc:
        raise ParseError(f"antipode: {exc}") from exc
    return hopf, params


def parse_structure(text: str) -> Structure:
    return parse_structure_file(text)[0]


def _grid_json(m: LinearMap) -> list[list[str]]:
    return [[rat_str(v) for v in row] for row in m.entries]


def _vector_json(v: Vector) -> list[str]:
    return [rat_str(c) for c in v.coords]


def serialize_structure(structure: Structure, params: Mapping[str, Fraction] | None = None) -> str:
    """Canonical JSON text for a structure (deterministic field order)."""
    out: dict = {}
    if isinstance(structure, HomHopf):
        out["kind"] = "hopf"
        bial = structure.bialgebra
        algebra, coalgebra = bial.algebra, bial.coalgebra
    elif isinstance(structure, HomBialgebra):
        out["kind"] = "bialgebra"
        algebra, coalgebra = structure.algebra, structure.coalgebra
    elif isinstance(structure, HomAlgebra):
        out["kind"] = "algebra"
        algebra, coalgebra = structure, None
    elif isinstance(structure, HomCoalgebra):
        out["kind"] = "coalgebra"
        algebra, coalgebra = None, structure
    else:
        raise TypeError(f"not a serializable structure: {type(structure)!r}")

    dim = structure.dim
    out["dim"] = dim
    out["convention"] = CONVENTION
    if algebra is not None:
        out["mul"] = [
            [[rat_str(algebra.mul.c[i][j][k]) for k in range(dim)] for j in range(dim)]
            for i in range(dim)
        ]
        out["alpha"] = _grid_json(algebra.alpha)
        out["unit"] = None if algebra.unit is None else _vector_json(algebra.unit)
    if coalgebra is not None:
        out["comul"] = [
            [[rat_str(coalgebra.comul.d[k][i][j]) for j in range(dim)] for i in range(dim)]
            for k in range(dim)
        ]
        out["beta"] = _grid_json(coalgebra.beta)
        out["counit"] = None if coalgebra.counit is None \
            else _vector_json(coalgebra.counit)
    if isinstance(structure, HomHopf):
        out["antipode"] = _grid_json(structure.antipode)
    if params:
        out["params"] = {k: rat_str(rat(v)) for k, v in sorted(params.items())}
    return json.dumps(out, indent=2) + "\n"


# ---------------------------------------------------------------------------
# registry of built-in structures


@dataclass(frozen=True)
class RegistryEntry:
    """A named parametric structure; ``build`` instantiates it from bindings."""

    name: str
    kind: str
    required: tuple[str, ...]
    defaults: tuple[tuple[str, Fraction], ...]
    description: str
    builder: Callable[[dict[str, Fraction]], Structure]

    def build(self, bindings: Mapping[str, object] | None = None) -> Structure:
        given = {k: rat(v) for k, v in (bindings or {}).items()}
        known = set(self.required) | {k for k, _ in self.defaults}
        for key in given:
            if key not in known:
                raise ValueError(
                    f"{self.name}: unknown parameter {key!r} (takes {sorted(known)})"
                )
        missing = [p for p in self.required if p not in given]
        if missing:
            raise ValueError(f"{self.name}: missing parameter binding(s) {missing}")
        values = dict(self.defaults)
        values.update(given)
        return self.builder(values)


def _mu1() -> MulTensor:
    return MulTensor.from_entries(2, {
        (0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 1): 1,
    })


def _mu2() -> MulTensor:
    return MulTensor.from_entries(2, {
        (0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1,
    })


def _alpha1(a1: Fraction, a2: Fraction) -> LinearMap:
    return LinearMap([[a1, 0], [a2 - a1, a2]])


def _alpha2(a1: Fraction, a2: Fraction) -> LinearMap:
    return LinearMap([[a1, 0], [a2, a1]])


def _mu1_algebra(v: dict[str, Fraction]) -> HomAlgebra:
    return HomAlgebra(mul=_mu1(), alpha=_alpha1(v["a1"], v["a2"]),
                      unit=Vector.basis(2, 0))


def _mu2_algebra(v: dict[str, Fraction]) -> HomAlgebra:
    return HomAlgebra(mul=_mu2(), alpha=_alpha2(v["a1"], v["a2"]),
                      unit=Vector.basis(2, 0))


_COMULS = {
    1: ComulTensor.from_entries(2, {(0, 0, 0): 1, (1, 1, 1): 1}),
    2: ComulTensor.from_entries(2, {(0, 0, 0): 1, (1, 0, 1): 1, (1, 1, 0): 1,
                                    (1, 1, 1): -2}),
    3: ComulTensor.from_entries(2, {(0, 0, 0): 1, (1, 0, 1): 1, (1, 1, 0): 1,
                                    (1, 1, 1): -1}),
}
_COUNITS = {1: Vector([1, 1]), 2: Vector([1, 0]), 3: Vector([1, 0])}


def _beta(row: int, v: dict[str, Fraction]) -> LinearMap:
    # Twisted coassociativity pins the lower-left entry of each family to 0
    # (and makes the third printed parameter of the family redundant); the
    # remaining entries are exactly the two-parameter solution families.
    b1, b2, b3 = v["b1"], v["b2"], v["b3"]
    if row == 1:
        return LinearMap([[b1, 0], [0, b2]])
    if row == 2:
        return LinearMap([[b1, (b1 - b3) / 2], [0, b3]])
    return LinearMap([[b1, b1 - b3], [0, b3]])


def _bialgebra_row(row: int) -> Callable[[dict[str, Fraction]], HomBialgebra]:
    def build(v: dict[str, Fraction]) -> HomBialgebra:
        return HomBialgebra(
            algebra=_mu1_algebra(v),
            coalgebra=HomCoalgebra(
                comul=_COMULS[row], beta=_beta(row, v), counit=_COUNITS[row]
            ),
        )

    return build


def _hopf2(v: dict[str, Fraction]) -> HomHopf:
    return HomHopf(bialgebra=_bialgebra_row(2)(v), antipode=LinearMap.identity(2))


_A_DEFAULTS = (("a1", ONE), ("a2", ONE))


def registry() -> dict[str, RegistryEntry]:
    """Named built-in structures; parametric entries need bindings."""
    entries = [
        RegistryEntry(
            "algebra-mu1", "algebra", ("a1", "a2"), (),
            "dim-2 unital Hom-associative algebra: e2.e2 = e2, twist "
            "[[a1,0],[a2-a1,a2]]",
            _mu1_algebra,
        ),
        RegistryEntry(
            "algebra-mu2", "algebra", ("a1", "a2"), (),
            "dim-2 unital Hom-associative algebra: e2.e2 = 0, twist "
            "[[a1,0],[a2,a1]]",
            _mu2_algebra,
        ),
        RegistryEntry(
            "bialgebra-1", "bialgebra", ("b1", "b2", "b3"), _A_DEFAULTS,
            "grouplike comultiplication over algebra-mu1; beta = diag(b1, b2) "
            "(coassociativity forces the off-diagonal to 0, so b3 is unused)",
            _bialgebra_row(1),
        ),
        RegistryEntry(
            "bialgebra-2", "bialgebra", ("b1", "b2", "b3"), _A_DEFAULTS,
            "Delta(e2) = e1(x)e2 + e2(x)e1 - 2 e2(x)e2 over algebra-mu1; "
            "beta = [[b1,(b1-b3)/2],[0,b3]] (b2 is pinned to 0 by "
            "coassociativity and unused)",
            _bialgebra_row(2),
        ),
        RegistryEntry(
            "bialgebra-3", "bialgebra", ("b1", "b2", "b3"), _A_DEFAULTS,
            "Delta(e2) = e1(x)e2 + e2(x)e1 - e2(x)e2 over algebra-mu1; "
            "beta = [[b1,b1-b3],[0,b3]] (b2 is pinned to 0 by coassociativity "
            "and unused)",
            _bialgebra_row(3),
        ),
        RegistryEntry(
            "hopf-2", "hopf", ("b1", "b2", "b3"), _A_DEFAULTS,
            "bialgebra-2 with its antipode, the identity matrix",
            _hopf2,
        ),
    ]
    return {e.name: e for e in entries}
