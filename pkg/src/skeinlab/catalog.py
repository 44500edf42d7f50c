"""Named-diagram corpus: frozen PD files plus an index of basic facts.

The corpus lives in ``skeinlab/data`` (override with the ``SKEINLAB_DATA``
environment variable).  Every entry records its expected component count and
writhe, which are re-checked at load time, and carries a provenance note
("constructed" for diagrams built by the package's own machinery,
"transcribed" for diagrams copied from standard presentations).  Entries may
list variant diagrams of the same link obtained by Reidemeister moves; these
exist so invariance can be tested against genuinely different diagrams.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path

from skeinlab.diagram import DiagramError, LinkDiagram, parse_pd


class CatalogError(KeyError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    pd_text: str
    n_components: int
    writhe: int
    provenance: str
    variant_files: tuple[str, ...]


def data_dir() -> Path:
    override = os.environ.get("SKEINLAB_DATA")
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "data"


def _index() -> dict:
    path = data_dir() / "index.json"
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise CatalogError(f"catalog index not found at {path}") from exc


def names() -> tuple[str, ...]:
    return tuple(sorted(_index()["entries"]))


def entry(name: str) -> CatalogEntry:
    entries = _index()["entries"]
    if name not in entries:
        raise CatalogError(f"unknown catalog entry {name!r}; known: {', '.join(sorted(entries))}")
    rec = entries[name]
    pd_text = (data_dir() / rec["file"]).read_text(encoding="utf-8").strip()
    return CatalogEntry(name, pd_text, rec["components"], rec["writhe"],
                        rec["provenance"], tuple(rec.get("variants", ())))


def _validated(pd_text: str, components: int, writhe: int, label: str) -> LinkDiagram:
    try:
        diagram = parse_pd(pd_text)
    except DiagramError as exc:
        raise CatalogError(f"catalog entry {label} does not parse: {exc}") from exc
    if diagram.n_components != components:
        raise CatalogError(f"{label}: component count {diagram.n_components} != recorded {components}")
    if diagram.writhe != writhe:
        raise CatalogError(f"{label}: writhe {diagram.writhe} != recorded {writhe}")
    return diagram


def get(name: str) -> LinkDiagram:
    rec = entry(name)
    return _validated(rec.pd_text, rec.n_components, rec.writhe, name)


def variants(name: str) -> list[LinkDiagram]:
    """Reidemeister-move-related diagrams of the same link as ``get(name)``."""
    rec = entry(name)
    out = []
    for fname in rec.variant_files:
        pd_text = (data_dir() / fname).read_text(encoding="utf-8").strip()
        try:
            out.append(parse_pd(pd_text))
        except DiagramError as exc:
            raise CatalogError(f"variant {fname} of {name} does not parse: {exc}") from exc
    return out


# convenience alias mirroring the operation name used by scripts
load_diagram = get
