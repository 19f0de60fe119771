# Cuspidal symbols, segments, multisegments and the poset of elementary operations
#
# A segment [nu^b rho, nu^(b+r-1) rho] is stored as Segment(symbol, offset=b,
# length=r).  Merging a linked pair moves DOWN in the order: b < a means b is
# reachable from a by a chain of elementary operations.
import re
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Tuple

import networkx as nx

from config import POSET_NODE_LIMIT
from errors import InvalidInput, NotLinked, ProblemParseError, SizeLimitExceeded, UnknownSymbol
from logging_config import log_debug, log_poset_built


@dataclass(frozen=True, order=True)
class CuspidalSymbol:
    """Formal supercuspidal rho of GL_size; source is its CuspidalGrowth (not part of identity)"""

    id: str
    size: int
    source: Any = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if not self.id or not isinstance(self.id, str):
            raise InvalidInput(f"cuspidal symbol id must be a nonempty string, got {self.id!r}")
        if not isinstance(self.size, int) or self.size < 1:
            raise InvalidInput(f"cuspidal symbol {self.id} must have size >= 1, got {self.size!r}")


@dataclass(frozen=True, order=True)
class Segment:
    symbol: CuspidalSymbol
    offset: int
    length: int

    def __post_init__(self):
        if not isinstance(self.length, int) or self.length < 1:
            raise InvalidInput(f"segment length must be >= 1, got {self.length!r}")

    @property
    def start(self):
        return self.offset

    @property
    def stop(self):
        return self.offset + self.length - 1

    @property
    def size(self):
        return self.symbol.size * self.length

    def contains(self, other: "Segment"):
        return (self.symbol.id == other.symbol.id
                and self.start <= other.start and other.stop <= self.stop)

    def render(self, shift=0):
        a, b = self.start - shift, self.stop - shift
        return f"[{self.symbol.id}:{a}]" if a == b else f"[{self.symbol.id}:{a}..{b}]"


@dataclass(frozen=True)
class Multisegment:
    """Finite multiset of segments, kept sorted by (symbol id, offset, length)"""

    segments: Tuple[Segment, ...] = ()

    def __post_init__(self):
        segments = tuple(sorted(self.segments))
        sizes: Dict[str, int] = {}
        for s in segments:
            if sizes.setdefault(s.symbol.id, s.symbol.size) != s.symbol.size:
                raise InvalidInput(f"symbol {s.symbol.id} is used with two different sizes")
        object.__setattr__(self, "segments", segments)

    @classmethod
    def of(cls, segments: Iterable[Segment]):
        return cls(tuple(segments))

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def __getitem__(self, i):
        return self.segments[i]

    @property
    def n(self):
        return sum(s.size for s in self.segments)

    @property
    def symbols(self) -> Tuple[CuspidalSymbol, ...]:
        seen: Dict[str, CuspidalSymbol] = {}
        for s in self.segments:
            seen.setdefault(s.symbol.id, s.symbol)
        return tuple(seen.values())

    def by_symbol(self) -> Dict[str, "Multisegment"]:
        groups: Dict[str, List[Segment]] = {}
        for s in self.segments:
            groups.setdefault(s.symbol.id, []).append(s)
        return {sid: Multisegment.of(segs) for sid, segs in groups.items()}

    def shifted(self, k: int):
        return Multisegment.of(Segment(s.symbol, s.offset + k, s.length) for s in self.segments)

    def render(self, normalize=False):
        return render_multisegment(self, normalize=normalize)

    def __str__(self):
        return self.render()


@dataclass(frozen=True)
class Poset:
    """Multisegments below a top one; hasse_edges are (upper, lower) node indices"""

    nodes: Tuple[Multisegment, ...]
    hasse_edges: Tuple[Tuple[int, int], ...]
    top: int = 0

    def index(self, a: Multisegment) -> int:
        return self.nodes.index(a)

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.nodes)))
        g.add_edges_from(self.hasse_edges)
        return g


def linked(d1: Segment, d2: Segment) -> bool:
    """Same symbol, neither contains the other, and the union is again a segment"""
    if d1.symbol.id != d2.symbol.id:
        return False
    if d1.contains(d2) or d2.contains(d1):
        return False
    return max(d1.start, d2.start) <= min(d1.stop, d2.stop) + 1


def _merge(d1: Segment, d2: Segment) -> List[Segment]:
    lo, hi = min(d1.start, d2.start), max(d1.stop, d2.stop)
    merged = [Segment(d1.symbol, lo, hi - lo + 1)]
    a, b = max(d1.start, d2.start), min(d1.stop, d2.stop)
    if a <= b:
        merged.append(Segment(d1.symbol, a, b - a + 1))
    return merged


def elementary_op(a: Multisegment, i: int, j: int) -> Multisegment:
    """Replace linked segments i, j of a by their union and (nonempty) intersection"""
    if i == j or not (0 <= i < len(a) and 0 <= j < len(a)):
        raise NotLinked(f"segment indices ({i}, {j}) do not name two segments of {a.render()}")
    d1, d2 = a[i], a[j]
    if not linked(d1, d2):
        raise NotLinked(f"{d1.render()} and {d2.render()} are not linked")
    rest = [s for k, s in enumerate(a.segments) if k not in (i, j)]
    return Multisegment.of(rest + _merge(d1, d2))


def _children(a: Multisegment):
    seen = set()
    for i, j in combinations(range(len(a)), 2):
        if linked(a[i], a[j]):
            child = elementary_op(a, i, j)
            if child not in seen:
                seen.add(child)
                yield child


def poset_below(a: Multisegment, node_limit: Optional[int] = None) -> Poset:
    """Breadth-first closure of a under elementary operations, a at index 0"""
    # hasse edges: transitive reduction of the one-step moves
    limit = POSET_NODE_LIMIT if node_limit is None else node_limit
    index: Dict[Multisegment, int] = {a: 0}
    nodes: List[Multisegment] = [a]
    steps = nx.DiGraph()
    steps.add_node(0)
    queue = deque([a])
    while queue:
        current = queue.popleft()
        for child in _children(current):
            if child not in index:
                if len(nodes) >= limit:
                    raise SizeLimitExceeded(f"poset below {a.render()} has more than {limit} nodes")
                index[child] = len(nodes)
                nodes.append(child)
                steps.add_node(index[child])
                queue.append(child)
            steps.add_edge(index[current], index[child])

    hasse = nx.transitive_reduction(steps)
    edges = tuple(sorted(hasse.edges()))
    log_debug(f"poset below {a.render()}: {steps.number_of_edges()} one-step edges")
    log_poset_built(len(nodes), len(edges))
    return Poset(nodes=tuple(nodes), hasse_edges=edges, top=0)


def is_generic(a: Multisegment) -> bool:
    """Maximal in its support: every segment is a single cuspidal"""
    return all(s.length == 1 for s in a)


def is_unlinked(a: Multisegment) -> bool:
    return not any(linked(d1, d2) for d1, d2 in combinations(a.segments, 2))


def supports_pairwise_disjoint(a: Multisegment) -> bool:
    """rho-rigid (one symbol) and no two segment intervals meet"""
    if not len(a) or len({s.symbol.id for s in a}) != 1:
        return False
    ordered = sorted(a.segments, key=lambda s: s.start)
    return all(prev.stop < nxt.start for prev, nxt in zip(ordered, ordered[1:]))


# text forms

_SEGMENT_RE = re.compile(r"\[\s*([^\s:\[\],]+)\s*:\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?\]")


def render_multisegment(a: Multisegment, normalize=False) -> str:
    """Compact form "[rho:0..1],[rho:1]"; normalize shifts each symbol's lowest offset to 0"""
    shifts = {}
    if normalize:
        for s in a:
            shifts[s.symbol.id] = min(shifts.get(s.symbol.id, s.start), s.start)
    return ",".join(s.render(shifts.get(s.symbol.id, 0)) for s in a)


def parse_multisegment(text: str, symbols: Mapping[str, CuspidalSymbol]) -> Multisegment:
    """Inverse of render_multisegment, resolving ids against declared symbols"""
    segments = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _SEGMENT_RE.match(text, pos)
        if not m:
            raise ProblemParseError(f"cannot read a segment at position {pos} of {text!r}")
        sid, first, last = m.group(1), int(m.group(2)), m.group(3)
        last = first if last is None else int(last)
        if last < first:
            raise ProblemParseError(f"segment [{sid}:{first}..{last}] ends before it starts")
        if sid not in symbols:
            raise UnknownSymbol(f"segment refers to undeclared symbol {sid!r}")
        segments.append(Segment(symbols[sid], first, last - first + 1))
        pos = m.end()
        while pos < len(text) and text[pos] in ", \t":
            pos += 1
    return Multisegment.of(segments)


def poset_to_dot(poset: Poset, annotate: Optional[Callable[[Multisegment], str]] = None) -> str:
    """DOT digraph of the Hasse diagram, edges pointing from upper to lower"""
    lines = ["digraph poset {", "  rankdir=TB;", "  node [shape=box];"]
    for i, node in enumerate(poset.nodes):
        label = _dot_escape(node.render(normalize=True))
        if annotate is not None:
            label = f"{label}\\n{_dot_escape(annotate(node))}"
        lines.append(f'  n{i} [label="{label}"];')
    for upper, lower in poset.hasse_edges:
        lines.append(f"  n{upper} -> n{lower};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')
