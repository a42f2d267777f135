"""Strength propagation over the related-word graph.

Labeled terms seed the graph; each round, every still-unlabeled node with at
least one labeled neighbor takes the arithmetic mean of its labeled
neighbors' strengths as of the start of the round. Labels freeze once
assigned, so the process terminates after at most |nodes| rounds and the
three pipeline stages stay additive.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, KeysView
from dataclasses import dataclass

from .ingest import Vocabulary
from .lexicon import Lexicon, LexiconEntry, Stage, classify, clamp_strength, mean_strength


class SynonymGraph:
    """Undirected graph over vocabulary terms; no self-loops."""

    __slots__ = ("_adjacency",)

    def __init__(
        self,
        nodes: Iterable[str] = (),
        edges: Iterable[tuple[str, str]] = (),
    ):
        self._adjacency: dict[str, set[str]] = {node: set() for node in nodes}
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop on {a!r}")
            if a not in self._adjacency or b not in self._adjacency:
                raise ValueError(f"edge ({a!r}, {b!r}) has an endpoint outside the node set")
            self._adjacency[a].add(b)
            self._adjacency[b].add(a)

    @property
    def nodes(self) -> KeysView[str]:
        return self._adjacency.keys()

    def __contains__(self, node: object) -> bool:
        return node in self._adjacency

    def __len__(self) -> int:
        return len(self._adjacency)

    def neighbors(self, node: str) -> set[str]:
        return self._adjacency[node]

    def edges(self) -> Iterator[tuple[str, str]]:
        """Each undirected edge once, as a sorted pair."""
        for node, neighbors in self._adjacency.items():
            for other in neighbors:
                if node < other:
                    yield (node, other)

    def edge_count(self) -> int:
        return sum(1 for _ in self.edges())


def build_graph(vocabulary: Vocabulary) -> SynonymGraph:
    """Symmetrize related-word lists into an undirected graph.

    One node per vocabulary term; an edge whenever either term lists the
    other, but only if both ends are vocabulary terms. Related terms pointing
    outside the vocabulary produce nothing.
    """
    edges = []
    for term, entry in vocabulary.items():
        for related in entry.related_terms:
            if related != term and related in vocabulary:
                edges.append((term, related))
    return SynonymGraph(vocabulary.keys(), edges)


@dataclass(frozen=True)
class PropagationResult:
    """labeled holds only newly labeled terms (never the seeds); unreached
    nodes got no label and stay out of the final dictionary."""

    labeled: Lexicon
    iterations: int
    unreached: frozenset[str]


def propagate(graph: SynonymGraph, seeds: Lexicon) -> PropagationResult:
    """Layered averaging from the seed set until a round assigns nothing.

    Seeds that are not graph nodes seed nothing and are ignored here (the
    caller keeps them). Rounds are synchronous: all of a round's new labels
    read only earlier labels, and means are order-independent, so the
    outcome does not depend on node iteration order. The final empty round
    counts toward `iterations`; a graph with nothing left to label reports 0.
    """
    labeled: dict[str, float] = {
        term: seeds.strength(term) for term in seeds if term in graph
    }
    seed_nodes = set(labeled)

    iterations = 0
    if len(labeled) < len(graph):
        frontier = seed_nodes
        while True:
            iterations += 1
            fresh: dict[str, float] = {}
            for node in frontier:
                for candidate in graph.neighbors(node):
                    if candidate in labeled or candidate in fresh:
                        continue
                    values = [
                        labeled[neighbor]
                        for neighbor in graph.neighbors(candidate)
                        if neighbor in labeled
                    ]
                    fresh[candidate] = mean_strength(values)
            if not fresh:
                break
            labeled.update(fresh)
            frontier = set(fresh)

    delta = Lexicon(
        LexiconEntry(term, clamp_strength(value), Stage.PROPAGATION)
        for term, value in labeled.items()
        if term not in seed_nodes
    )
    unreached = frozenset(graph.nodes - labeled.keys())
    return PropagationResult(labeled=delta, iterations=iterations, unreached=unreached)


@dataclass
class StageReport:
    """Counts of final-lexicon entries per stage and per strength class."""

    total: int
    by_stage: dict[Stage, int]
    by_class: dict[int, int]

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "stages": {stage.value: self.by_stage[stage] for stage in Stage},
            "classes": {str(cls): self.by_class[cls] for cls in range(-2, 3)},
        }

    def format_text(self, bar_width: int = 40) -> str:
        lines = ["lexicon stage report", f"  total entries: {self.total}", ""]
        lines.append(f"  {'stage':<16} count")
        for stage in Stage:
            lines.append(f"  {stage.value:<16} {self.by_stage[stage]:>5}")
        lines.append("")
        lines.append(f"  {'class':>5}  count  histogram")
        peak = max(self.by_class.values(), default=0)
        for cls in range(-2, 3):
            count = self.by_class[cls]
            bar = "#" * (round(bar_width * count / peak) if peak else 0)
            lines.append(f"  {cls:>5}  {count:>5}  {bar}")
        return "\n".join(lines) + "\n"


def stage_report(final: Lexicon) -> StageReport:
    by_stage = {stage: 0 for stage in Stage}
    by_class = {cls: 0 for cls in range(-2, 3)}
    for entry in final.entries():
        by_stage[entry.stage] += 1
        by_class[classify(entry.strength)] += 1
    return StageReport(total=len(final), by_stage=by_stage, by_class=by_class)
