"""Coauthorship graph and the capital-based relation coder (C).

The graph is undirected and unweighted: each document's author list
contributes a clique, and repeated collaborations do not add weight.
Three centralities feed a composite capital score; the relation coder
uses shared authorship, coauthorship edges, then the capital gap.

Adjacency lists are kept sorted so every traversal, and therefore every
floating-point accumulation, is reproducible run to run.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .codebook import Uncodable
from .models import DocumentMetadata

DEFAULT_DELTA = 0.2
_NEUTRAL_COMPOSITE = 0.5


@dataclass
class CoauthorGraph:
    """Undirected simple graph over normalized author keys."""

    adjacency: dict[str, list[str]]

    @property
    def nodes(self) -> list[str]:
        return list(self.adjacency)

    @property
    def edges(self) -> list[tuple[str, str]]:
        seen = []
        for node, neighbors in self.adjacency.items():
            for other in neighbors:
                if node < other:
                    seen.append((node, other))
        return sorted(seen)

    def __contains__(self, key: str) -> bool:
        return key in self.adjacency


def build_coauthor_graph(corpus_metadata: list[DocumentMetadata]) -> CoauthorGraph:
    """Union of per-document author cliques, nodes and edges sorted."""
    nodes: set[str] = set()
    edges: set[tuple[str, str]] = set()
    for metadata in corpus_metadata:
        keys = sorted({author.key for author in metadata.authors})
        nodes.update(keys)
        for a, b in combinations(keys, 2):
            edges.add((a, b))
    adjacency: dict[str, set[str]] = {node: set() for node in sorted(nodes)}
    for a, b in edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    return CoauthorGraph({node: sorted(peers) for node, peers in sorted(adjacency.items())})


def centrality_degree(graph: CoauthorGraph) -> dict[str, float]:
    return {node: float(len(peers)) for node, peers in graph.adjacency.items()}


def _bfs_distances(graph: CoauthorGraph, source: str) -> dict[str, int]:
    distances = {source: 0}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for neighbor in graph.adjacency[node]:
            if neighbor not in distances:
                distances[neighbor] = distances[node] + 1
                queue.append(neighbor)
    return distances


def centrality_harmonic(graph: CoauthorGraph) -> dict[str, float]:
    """Harmonic closeness: sum of 1/d to every other node, 1/inf = 0."""
    result = {}
    for node in graph.adjacency:
        distances = _bfs_distances(graph, node)
        result[node] = sum(1.0 / d for other, d in distances.items() if other != node)
    return result


def centrality_betweenness(graph: CoauthorGraph) -> dict[str, float]:
    """Shortest-path betweenness via per-source dependency accumulation.

    Each unordered pair is counted once, so a single bridge node on a
    three-node path scores 1.0.
    """
    betweenness = {node: 0.0 for node in graph.adjacency}
    for source in graph.adjacency:
        stack: list[str] = []
        predecessors: dict[str, list[str]] = {node: [] for node in graph.adjacency}
        sigma = {node: 0.0 for node in graph.adjacency}
        sigma[source] = 1.0
        distance = {node: -1 for node in graph.adjacency}
        distance[source] = 0
        queue = deque([source])
        while queue:
            node = queue.popleft()
            stack.append(node)
            for neighbor in graph.adjacency[node]:
                if distance[neighbor] < 0:
                    distance[neighbor] = distance[node] + 1
                    queue.append(neighbor)
                if distance[neighbor] == distance[node] + 1:
                    sigma[neighbor] += sigma[node]
                    predecessors[neighbor].append(node)
        dependency = {node: 0.0 for node in graph.adjacency}
        while stack:
            node = stack.pop()
            for pred in predecessors[node]:
                dependency[pred] += (sigma[pred] / sigma[node]) * (1.0 + dependency[node])
            if node != source:
                betweenness[node] += dependency[node]
    return {node: value / 2.0 for node, value in betweenness.items()}


def percentile_ranks(values: dict[str, float]) -> dict[str, float]:
    """Mean-rank percentiles in (0, 1]; a zero-variance metric is 0.5.

    Ranks run 1..n with ties sharing the mean rank of their block, then
    divide by n. When every value is identical the metric carries no
    ordering information, so everyone sits at the midpoint.
    """
    if not values:
        return {}
    distinct = set(values.values())
    if len(distinct) == 1:
        return {key: 0.5 for key in values}
    ordered = sorted(values.items(), key=lambda item: (item[1], item[0]))
    n = len(ordered)
    ranks: dict[str, float] = {}
    i = 0
    while i < n:
        j = i
        while j + 1 < n and ordered[j + 1][1] == ordered[i][1]:
            j += 1
        mean_rank = (i + 1 + j + 1) / 2.0
        for k in range(i, j + 1):
            ranks[ordered[k][0]] = mean_rank / n
        i = j + 1
    return ranks


@dataclass(frozen=True)
class CapitalScore:
    author: str
    degree: float
    harmonic: float
    betweenness: float
    composite: float


def capital_scores(graph: CoauthorGraph) -> dict[str, CapitalScore]:
    """Composite capital: unweighted mean of the three percentile ranks."""
    degree = centrality_degree(graph)
    harmonic = centrality_harmonic(graph)
    betweenness = centrality_betweenness(graph)
    degree_pct = percentile_ranks(degree)
    harmonic_pct = percentile_ranks(harmonic)
    betweenness_pct = percentile_ranks(betweenness)
    scores = {}
    for node in graph.adjacency:
        composite = (degree_pct[node] + harmonic_pct[node] + betweenness_pct[node]) / 3.0
        scores[node] = CapitalScore(
            author=node,
            degree=degree[node],
            harmonic=harmonic[node],
            betweenness=betweenness[node],
            composite=composite,
        )
    return scores


def _max_composite(keys: list[str], scores: dict[str, CapitalScore]) -> float:
    # Authors outside the corpus graph carry no capital information and
    # sit at the neutral midpoint, mirroring the degenerate-graph rule.
    composites = [
        scores[key].composite if key in scores else _NEUTRAL_COMPOSITE for key in keys
    ]
    return max(composites) if composites else _NEUTRAL_COMPOSITE


def code_relation(
    citing_authors: list[str],
    cited_authors: list[str],
    graph: CoauthorGraph,
    scores: dict[str, CapitalScore],
    delta: float = DEFAULT_DELTA,
) -> tuple[str | Uncodable, str]:
    """Relation between citing and cited author sets.

    Priority: shared author key, then a coauthorship edge between the
    sets, then a capital gap of at least delta, then the parallel
    default (flagged as such in the rule id).
    """
    if not citing_authors or not cited_authors:
        return Uncodable("missing-authors"), "C:missing"
    citing = set(citing_authors)
    cited = set(cited_authors)
    shared = citing & cited
    if shared:
        return "C1", f"C:shared-author:{sorted(shared)[0]}"
    for citing_key in sorted(citing):
        peers = graph.adjacency.get(citing_key, ())
        for cited_key in sorted(cited):
            if cited_key in peers:
                return "C2", f"C:coauthor-edge:{citing_key}~{cited_key}"
    gap = _max_composite(sorted(cited), scores) - _max_composite(sorted(citing), scores)
    if gap >= delta:
        return "C3", f"C:capital-gap:{gap:.3f}"
    return "C2", "C:parallel-default"


def write_edge_list(graph: CoauthorGraph, path: str | Path) -> None:
    """Write the sorted tab-separated edge list."""
    lines = [f"{a}\t{b}" for a, b in graph.edges]
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""), encoding="utf-8")
