"""Graph-based topical keyphrase extraction.

Noun-phrase candidates are clustered into topics by stem-set similarity;
a multipartite graph (no arcs inside a topic) is built with reciprocal
word-distance edge weights, each topic's earliest candidate gets an
incoming-weight promotion, and candidates are ranked by a damped random
walk. The numeric inner loops live in _kernels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .aggregate import Keyphrase, METHOD_TOPIC
from .kpminer import Candidate, MAX_CANDIDATE_WORDS
from .textcore import POSClass, Token

JACCARD_THRESHOLD = 0.25
PROMOTE_ALPHA = 1.1
DAMPING = 0.85


class EmptyGraph(ValueError):
    pass


class DegenerateInput(ValueError):
    pass


@dataclass
class TopicCluster:
    id: int
    members: frozenset[str]
    first_member: str


@dataclass
class KpGraph:
    nodes: list[str]
    weights: np.ndarray  # dense (n, n); weights[i, j] is the arc i -> j

    def edges(self) -> list[tuple[str, str, float]]:
        out = []
        n = len(self.nodes)
        for i in range(n):
            for j in range(n):
                if self.weights[i, j] > 0:
                    out.append((self.nodes[i], self.nodes[j], float(self.weights[i, j])))
        return out


_NP_TAGS = (POSClass.NOUN, POSClass.PROPN)


def select_np_candidates(tokens: list[Token]) -> list[Candidate]:
    """Maximal ADJ* (NOUN|PROPN)+ runs within sentences, longest match only."""
    grouped: dict[str, Candidate] = {}
    order: list[str] = []
    i, n = 0, len(tokens)
    while i < n:
        j = i
        sent = tokens[i].sent_idx
        while j < n and tokens[j].sent_idx == sent and tokens[j].pos == POSClass.ADJ:
            j += 1
        k = j
        while k < n and tokens[k].sent_idx == sent and tokens[k].pos in _NP_TAGS:
            k += 1
        if k == j:
            i = max(j, i + 1)
            continue
        span = tokens[i:k]
        if len(span) > MAX_CANDIDATE_WORDS:
            # keep the trailing words: modifiers drop first, the head stays
            span = span[-MAX_CANDIDATE_WORDS:]
        key = " ".join(t.stem for t in span)
        candidate = grouped.get(key)
        if candidate is None:
            grouped[key] = Candidate(
                words=[t.text for t in span],
                stems=[t.stem for t in span],
                key=key,
                positions=[span[0].word_pos],
            )
            order.append(key)
        else:
            candidate.positions.append(span[0].word_pos)
        i = k
    out = [grouped[key] for key in order]
    for candidate in out:
        candidate.positions.sort()
    return out


def _jaccard(a: frozenset[str], b: frozenset[str]) -> float:
    if not a and not b:
        return 0.0
    return len(a & b) / len(a | b)


def cluster_topics(
    candidates: list[Candidate], threshold: float = JACCARD_THRESHOLD
) -> list[TopicCluster]:
    """Average-linkage agglomerative clustering on stem-set Jaccard similarity.

    Merging continues while the best average similarity is >= threshold
    (0.25 by default); ties break deterministically on the
    lexicographically smaller pair of cluster representatives (each
    cluster's smallest member key).
    """
    stem_sets = {c.key: frozenset(c.stems) for c in candidates}
    first_pos = {c.key: c.first_pos for c in candidates}
    clusters: list[list[str]] = [[c.key] for c in candidates]

    def avg_sim(a: list[str], b: list[str]) -> float:
        total = sum(_jaccard(stem_sets[x], stem_sets[y]) for x in a for y in b)
        return total / (len(a) * len(b))

    while len(clusters) > 1:
        best: tuple[float, tuple[str, str], int, int] | None = None
        for ai in range(len(clusters)):
            for bi in range(ai + 1, len(clusters)):
                sim = avg_sim(clusters[ai], clusters[bi])
                rep = tuple(sorted((min(clusters[ai]), min(clusters[bi]))))
                entry = (sim, rep, ai, bi)
                if best is None or (-entry[0], entry[1]) < (-best[0], best[1]):
                    best = entry
        if best is None or best[0] < threshold:
            break
        _, _, ai, bi = best
        merged = sorted(clusters[ai] + clusters[bi])
        clusters = [c for idx, c in enumerate(clusters) if idx not in (ai, bi)]
        clusters.append(merged)

    def first_member(members: list[str]) -> str:
        return min(members, key=lambda key: (first_pos[key], key))

    ordered = sorted(clusters, key=lambda c: (first_pos[first_member(c)], first_member(c)))
    return [
        TopicCluster(id=idx, members=frozenset(members), first_member=first_member(members))
        for idx, members in enumerate(ordered)
    ]


def _topic_ids(nodes: list[str], topics: list[TopicCluster]) -> np.ndarray:
    lookup: dict[str, int] = {}
    for topic in topics:
        for key in topic.members:
            lookup[key] = topic.id
    return np.array([lookup[key] for key in nodes], dtype=np.int64)


def build_graph(candidates: list[Candidate], topics: list[TopicCluster]) -> KpGraph:
    """Cross-topic arcs weighted by summed reciprocal occurrence distances."""
    nodes = [c.key for c in candidates]
    all_positions: list[int] = []
    for c in candidates:
        all_positions.extend(c.positions)
    if len(set(all_positions)) != len(all_positions):
        raise DegenerateInput("two candidates share an occurrence position")
    starts = np.zeros(len(candidates), dtype=np.int64)
    counts = np.zeros(len(candidates), dtype=np.int64)
    cursor = 0
    for idx, c in enumerate(candidates):
        starts[idx] = cursor
        counts[idx] = len(c.positions)
        cursor += len(c.positions)
    flat = np.array(all_positions, dtype=np.int64)
    weights = _kernels.pair_weights(starts, counts, flat, _topic_ids(nodes, topics))
    return KpGraph(nodes=nodes, weights=weights)


def promote_first(
    graph: KpGraph,
    topics: list[TopicCluster],
    candidates: list[Candidate],
    alpha: float = PROMOTE_ALPHA,
) -> KpGraph:
    """Boost arcs into each multi-member topic's earliest candidate.

    For topic T with first member f and every outside node i, the arc
    i -> f gains alpha * exp(1 / (1 + first_pos(f))) * sum of the original
    weights j -> i over the other members j of T. All additions are
    computed against the input graph, then applied at once.
    """
    index = {key: i for i, key in enumerate(graph.nodes)}
    first_pos = {c.key: c.first_pos for c in candidates}
    adjusted = graph.weights.copy()
    for topic in topics:
        if len(topic.members) < 2:
            continue
        f = index[topic.first_member]
        others = [index[key] for key in topic.members if key != topic.first_member]
        scale = alpha * math.exp(1.0 / (1.0 + first_pos[topic.first_member]))
        member_ids = {index[key] for key in topic.members}
        for i in range(len(graph.nodes)):
            if i in member_ids:
                continue
            mass = sum(graph.weights[j, i] for j in others)
            if mass > 0:
                adjusted[i, f] += scale * mass
    return KpGraph(nodes=graph.nodes, weights=adjusted)


def rank(
    graph: KpGraph,
    damping: float = DAMPING,
    tol: float = 1e-8,
    max_iter: int = 200,
) -> dict[str, float]:
    """Stationary scores of the damped walk; they sum to 1."""
    if not graph.nodes:
        raise EmptyGraph("cannot rank an empty graph")
    scores = _kernels.power_iteration(graph.weights, damping, tol, max_iter)
    return {key: float(s) for key, s in zip(graph.nodes, scores)}


def extract_topics(
    doc,
    top_k: int = 5,
    alpha: float = PROMOTE_ALPHA,
    damping: float = DAMPING,
    threshold: float = JACCARD_THRESHOLD,
) -> list[Keyphrase]:
    """Full pipeline: select, cluster, build, promote, rank, emit top-k."""
    candidates = select_np_candidates(doc.tokens)
    if not candidates:
        return []
    topics = cluster_topics(candidates, threshold=threshold)
    graph = build_graph(candidates, topics)
    graph = promote_first(graph, topics, candidates, alpha=alpha)
    scores = rank(graph, damping=damping)
    by_key = {c.key: c for c in candidates}
    ranked = sorted(
        scores.items(), key=lambda item: (-item[1], by_key[item[0]].first_pos, item[0])
    )
    out = []
    for key, score in ranked[:top_k]:
        c = by_key[key]
        out.append(
            Keyphrase(
                surface=" ".join(c.words),
                normalized=" ".join(w.lower() for w in c.words),
                key=c.key,
                score=score,
                method=METHOD_TOPIC,
                first_pos=c.first_pos,
            )
        )
    return out
