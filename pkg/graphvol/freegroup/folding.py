"""Stallings foldings of finitely generated subgroups.

The subgroup generated by a list of words is represented by its folded core
graph: a bouquet of one loop per generating word at the base vertex, folded
until no vertex has two outgoing (or two incoming) edges with the same label,
then trimmed of dangling trees away from the base. The subgroup's rank is the
first Betti number ``E - V + 1`` of that graph.

A homomorphism from the free group of rank ``k`` onto the subgroup spanned by
``k`` image words is injective exactly when that rank equals ``k``: a free
group is Hopfian, so a surjection between free groups of equal finite rank is
an isomorphism.
"""

from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from networkx.utils import UnionFind

from graphvol.core.logging import get_logger
from graphvol.freegroup.words import Word, default_alphabet

logger = get_logger(__name__)

Edge = tuple[int, str, int]


@dataclass(frozen=True)
class SubgroupGraph:
    """Folded core graph; vertices are ``0..vertex_count-1`` with base ``0``."""

    vertex_count: int
    edges: tuple[Edge, ...]
    alphabet: tuple[str, ...]
    base: int = 0

    def out_edges(self, v: int) -> Iterator[Edge]:
        return (e for e in self.edges if e[0] == v)

    def in_edges(self, v: int) -> Iterator[Edge]:
        return (e for e in self.edges if e[2] == v)

    def degree(self, v: int) -> int:
        return sum((e[0] == v) + (e[2] == v) for e in self.edges)

    def is_folded(self) -> bool:
        seen_out: set[tuple[int, str]] = set()
        seen_in: set[tuple[int, str]] = set()
        for src, label, dst in self.edges:
            if (src, label) in seen_out or (dst, label) in seen_in:
                return False
            seen_out.add((src, label))
            seen_in.add((dst, label))
        return True


def _bouquet(words: Sequence[Word]) -> tuple[int, set[Edge]]:
    edges: set[Edge] = set()
    next_vertex = 1
    for w in words:
        current = 0
        for i, letter in enumerate(w):
            if i == len(w) - 1:
                target = 0
            else:
                target = next_vertex
                next_vertex += 1
            if letter.sign == 1:
                edges.add((current, letter.generator, target))
            else:
                edges.add((target, letter.generator, current))
            current = target
    return next_vertex, edges


def _fold_once(edges: set[Edge], classes: UnionFind) -> tuple[set[Edge], bool]:
    edges = {(classes[s], g, classes[t]) for s, g, t in edges}
    out_target: dict[tuple[int, str], int] = {}
    in_source: dict[tuple[int, str], int] = {}
    for src, label, dst in sorted(edges):
        if (src, label) in out_target and out_target[(src, label)] != dst:
            classes.union(out_target[(src, label)], dst)
            return edges, True
        if (dst, label) in in_source and in_source[(dst, label)] != src:
            classes.union(in_source[(dst, label)], src)
            return edges, True
        out_target[(src, label)] = dst
        in_source[(dst, label)] = src
    return edges, False


def _trim(edges: set[Edge], base: int) -> set[Edge]:
    while True:
        degree: dict[int, int] = {}
        for src, _, dst in edges:
            degree[src] = degree.get(src, 0) + 1
            degree[dst] = degree.get(dst, 0) + 1
        leaves = {v for v, d in degree.items() if d == 1 and v != base}
        if not leaves:
            return edges
        edges = {e for e in edges if e[0] not in leaves and e[2] not in leaves}


def _relabel(edges: set[Edge], base: int, alphabet: tuple[str, ...]) -> SubgroupGraph:
    order = {g: i for i, g in enumerate(alphabet)}
    new_id = {base: 0}
    queue = deque([base])
    while queue:
        v = queue.popleft()
        steps = sorted(
            [(order[g], 0, t) for s, g, t in edges if s == v]
            + [(order[g], 1, s) for s, g, t in edges if t == v]
        )
        for _, _, w in steps:
            if w not in new_id:
                new_id[w] = len(new_id)
                queue.append(w)
    relabelled = sorted((new_id[s], g, new_id[t]) for s, g, t in edges)
    return SubgroupGraph(vertex_count=len(new_id), edges=tuple(relabelled), alphabet=alphabet)


def fold(generating_words: Sequence[Word]) -> SubgroupGraph:
    """Fold the bouquet of ``generating_words`` into the subgroup's core graph.

    Deterministic for a fixed input order; vertices are renumbered breadth-first
    from the base vertex.
    """
    alphabet: tuple[str, ...] = generating_words[0].alphabet if generating_words else default_alphabet()
    for w in generating_words[1:]:
        alphabet = alphabet + tuple(g for g in w.alphabet if g not in alphabet)

    vertex_count, edges = _bouquet([w for w in generating_words if w])
    classes = UnionFind(range(vertex_count))
    folds = 0
    changed = True
    while changed:
        edges, changed = _fold_once(edges, classes)
        folds += changed
    edges = {(classes[s], g, classes[t]) for s, g, t in edges}
    graph = _relabel(_trim(edges, classes[0]), classes[0], alphabet)

    logger.debug(
        "Folded subgroup graph",
        generators=len(generating_words),
        folds=folds,
        vertices=graph.vertex_count,
        edges=len(graph.edges),
    )
    return graph


def rank(g: SubgroupGraph) -> int:
    """First Betti number of the (connected) core graph."""
    return len(g.edges) - g.vertex_count + 1


def contains(g: SubgroupGraph, w: Word) -> bool:
    """Whether ``w`` lies in the subgroup: read it as a closed path at the base."""
    out_target = {(s, label): t for s, label, t in g.edges}
    in_source = {(t, label): s for s, label, t in g.edges}
    current = g.base
    for letter in w:
        step = out_target if letter.sign == 1 else in_source
        key = (current, letter.generator)
        if key not in step:
            return False
        current = step[key]
    return current == g.base


def verify_injectivity(images: Sequence[Word]) -> bool:
    """Whether the basis-to-``images`` homomorphism from a free group of rank ``len(images)`` is injective."""
    if not images:
        raise ValueError("at least one image word is required")
    subgroup_rank = rank(fold(images))
    logger.debug("Checked injectivity", images=len(images), rank=subgroup_rank)
    return subgroup_rank == len(images)
