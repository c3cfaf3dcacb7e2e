"""Bundled arrangements, epimorphisms, and cover specifications.

The three builtin covers pair the two builtin arrangements with fixed
(Z/5Z)^2-valued epimorphisms; every blown-up point set defaults to all
points of multiplicity at least 3.
"""

from __future__ import annotations

from .arrangement import Arrangement, arrangement_from_json, complete_quadrilateral, dual_hesse
from .cover import BLOW_ALL_TRIPLE, CoverModel
from .homology import Epimorphism

# triple-point index sets of the nine-line arrangement, 1-based
DUAL_HESSE_TRIPLES = (
    (1, 2, 3), (4, 5, 6), (7, 8, 9), (1, 4, 7), (2, 5, 8), (3, 6, 9),
    (1, 5, 9), (3, 5, 7), (1, 6, 8), (3, 4, 8), (2, 4, 9), (2, 6, 7),
)

PHI1 = Epimorphism(
    m=5,
    k=2,
    rows=(
        (1, 1), (1, 0), (1, 1),
        (3, 3), (3, 0), (0, 1),
        (0, 1), (0, 2), (1, 1),
    ),
)

PHI2 = Epimorphism(
    m=5,
    k=2,
    rows=(
        (0, 1), (1, 0), (1, 0),
        (0, 1), (1, 0), (0, 1),
        (1, 2), (1, 2), (0, 3),
    ),
)

PHI3 = Epimorphism(
    m=5,
    k=2,
    rows=(
        (1, 0), (1, 0), (1, 2),
        (0, 1), (0, 1), (2, 1),
    ),
)

_ARRANGEMENTS = {
    "dual_hesse": dual_hesse,
    "complete_quadrilateral": complete_quadrilateral,
}

_COVERS = {
    "example1": ("dual_hesse", PHI1),
    "example2": ("dual_hesse", PHI2),
    "example3": ("complete_quadrilateral", PHI3),
}


def builtin_arrangement(name: str) -> Arrangement:
    try:
        return _ARRANGEMENTS[name]()
    except KeyError:
        raise ValueError(
            f"unknown builtin arrangement {name!r}; "
            f"available: {sorted(_ARRANGEMENTS)}"
        ) from None


def builtin_cover(name: str) -> CoverModel:
    try:
        arr_name, phi = _COVERS[name]
    except KeyError:
        raise ValueError(
            f"unknown builtin cover {name!r}; available: {sorted(_COVERS)}"
        ) from None
    return CoverModel.build(builtin_arrangement(arr_name), phi, BLOW_ALL_TRIPLE)


def resolve_arrangement(ref: str | dict) -> Arrangement:
    """Accept 'builtin:<name>', a JSON file path, or an inline JSON object."""
    if isinstance(ref, dict):
        return arrangement_from_json(ref)
    if ref.startswith("builtin:"):
        return builtin_arrangement(ref.split(":", 1)[1])
    import json

    with open(ref, "r", encoding="utf-8") as fh:
        return arrangement_from_json(json.load(fh))


def cover_from_json(data: dict) -> CoverModel:
    """Schema: {"arrangement": ref, "m": int, "k": int, "phi": [[..],..],
    "blow_up": "all_r_ge_3" | [point ids]}."""
    try:
        arr = resolve_arrangement(data["arrangement"])
        m = int(data["m"])
        k = int(data["k"])
        phi = Epimorphism(m=m, k=k, rows=tuple(tuple(r) for r in data["phi"]))
        blow = data.get("blow_up", BLOW_ALL_TRIPLE)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed cover JSON: {exc}") from exc
    return CoverModel.build(arr, phi, blow)


def resolve_cover(ref: str | dict) -> CoverModel:
    if isinstance(ref, dict):
        return cover_from_json(ref)
    if ref.startswith("builtin:"):
        return builtin_cover(ref.split(":", 1)[1])
    import json

    with open(ref, "r", encoding="utf-8") as fh:
        return cover_from_json(json.load(fh))
