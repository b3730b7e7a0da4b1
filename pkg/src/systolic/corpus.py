"""Built-in corpus of small complexes and graphs used by tests and the CLI."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .complexes import SimplicialComplex, from_facets
from .graphs import Graph

_COMPLEX_NAMES = (
    "rp2_min",
    "sphere_delta3",
    "torus_7",
    "moebius_band",
    "pinched_spheres",
)
_GRAPH_NAMES = ("petersen",)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    kind: str  # "complex" | "graph"
    provenance: str


def _read(name: str) -> dict:
    path = resources.files("systolic").joinpath("data", f"{name}.json")
    return json.loads(path.read_text())


def corpus_list() -> list[CorpusEntry]:
    """Names and provenance of every built-in object, complexes first."""
    entries = []
    for name in _COMPLEX_NAMES + _GRAPH_NAMES:
        data = _read(name)
        entries.append(CorpusEntry(name, data["kind"], data["provenance"]))
    return entries


def corpus_complex(name: str) -> SimplicialComplex:
    if name not in _COMPLEX_NAMES:
        raise KeyError(f"unknown corpus complex {name!r}; have {_COMPLEX_NAMES}")
    data = _read(name)
    return from_facets(data["facets"], vertex_count=data["vertices"])


def corpus_graph(name: str) -> Graph:
    if name not in _GRAPH_NAMES:
        raise KeyError(f"unknown corpus graph {name!r}; have {_GRAPH_NAMES}")
    data = _read(name)
    return Graph(data["n"], tuple((u, v) for u, v in data["edges"]))


def corpus_complexes() -> dict[str, SimplicialComplex]:
    return {name: corpus_complex(name) for name in _COMPLEX_NAMES}
