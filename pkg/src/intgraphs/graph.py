"""
Directed multigraphs and alternating-path machinery.

Two graphs interact along their shared vertices: an alternating path is an
edge sequence whose consecutive edges compose head-to-tail and strictly
alternate between the two graphs.  Everything in this module is organised
around one derived structure (`derived_graph`): the graph whose nodes are
the edges of the interacting pair, tagged 0/1 by side, with an arc e -> e'
exactly when e' may follow e in an alternating path.  Walks in the derived
graph are the alternating paths, so path finiteness becomes
reachability-plus-acyclicity and cycle finiteness becomes a condition on
strongly connected components.

Vertices and edge ids are arbitrary hashable values.  Tuple ids are
treated as composite (sequences of base ids); `flatten` computes the flat
normal form that makes results of nested executions comparable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Iterator, Sequence

Vertex = Hashable
EdgeId = Hashable

DIRECTED = "directed"
UNORIENTED = "unoriented"
MODES = (DIRECTED, UNORIENTED)


class GraphError(ValueError):
    """Base error for graph construction and interaction failures."""


class DuplicateEdgeIdError(GraphError):
    pass


class UnknownVertexError(GraphError):
    pass


class InfinitePathSetError(GraphError):
    """The boundary-to-boundary alternating paths form an infinite set.

    ``witness`` is a pumpable cycle of derived nodes (side, Edge), each
    reachable from a boundary source and co-reachable from a boundary sink.
    """

    def __init__(self, witness: Sequence[tuple[int, "Edge"]]):
        self.witness = tuple(witness)
        ids = " ".join(str(edge.id) for _, edge in self.witness)
        super().__init__(f"infinite alternating path set (pumpable cycle: {ids})")


class InfiniteCycleSetError(GraphError):
    """The prime alternating cycles form an infinite set.

    ``node`` is a derived node admitting two distinct continuations
    (``branches``) inside a single strongly connected component.
    """

    def __init__(self, node: tuple[int, "Edge"], branches: Sequence[tuple[int, "Edge"]]):
        self.node = node
        self.branches = tuple(branches)
        ids = ", ".join(str(edge.id) for _, edge in self.branches)
        super().__init__(
            f"infinite prime cycle set (edge {node[1].id!r} re-enters its "
            f"component via {ids})"
        )


@dataclass(frozen=True)
class Edge:
    id: EdgeId
    src: Vertex
    tgt: Vertex


class Graph:
    """Immutable directed multigraph with identified edges.

    Parallel edges and self-loops are permitted; edge ids must be unique
    and endpoints must belong to the vertex set.
    """

    __slots__ = ("vertices", "edges", "_by_id")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Edge | tuple] = ()):
        vs = frozenset(vertices)
        out: list[Edge] = []
        by_id: dict[EdgeId, Edge] = {}
        for item in edges:
            e = item if isinstance(item, Edge) else Edge(*item)
            if e.id in by_id:
                raise DuplicateEdgeIdError(f"duplicate edge id {e.id!r}")
            if e.src not in vs:
                raise UnknownVertexError(f"edge {e.id!r}: unknown source vertex {e.src!r}")
            if e.tgt not in vs:
                raise UnknownVertexError(f"edge {e.id!r}: unknown target vertex {e.tgt!r}")
            by_id[e.id] = e
            out.append(e)
        self.vertices = vs
        self.edges = tuple(out)
        self._by_id = by_id

    @classmethod
    def empty(cls) -> Graph:
        return cls(frozenset(), ())

    def edge(self, edge_id: EdgeId) -> Edge:
        return self._by_id[edge_id]

    @property
    def edge_ids(self) -> frozenset:
        return frozenset(self._by_id)

    def relabel_vertices(self, mapping: dict[Vertex, Vertex]) -> Graph:
        """Rename vertices through ``mapping`` (identity where missing).

        Edge ids are untouched.  The mapping must not merge vertices.
        """
        send = lambda v: mapping.get(v, v)
        images = {send(v) for v in self.vertices}
        if len(images) != len(self.vertices):
            raise GraphError("vertex relabelling merges distinct vertices")
        return Graph(images, [Edge(e.id, send(e.src), send(e.tgt)) for e in self.edges])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and set(self.edges) == set(other.edges)

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(self.edges)))

    def __repr__(self) -> str:
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"


class ExtNat:
    """A natural number extended with an absorbing infinity (omega).

    Addition never overflows: omega + anything = omega.  Instances are
    immutable and totally ordered, omega greatest.
    """

    __slots__ = ("value",)

    def __init__(self, value: int | None):
        if value is not None and (not isinstance(value, int) or value < 0):
            raise ValueError(f"extended natural must be >= 0 or omega, got {value!r}")
        object.__setattr__(self, "value", value)

    def __setattr__(self, name: str, val: Any) -> None:
        raise AttributeError("ExtNat is immutable")

    @property
    def is_omega(self) -> bool:
        return self.value is None

    def _coerce(self, other: Any) -> "ExtNat":
        if isinstance(other, ExtNat):
            return other
        if isinstance(other, int):
            return ExtNat(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Any) -> "ExtNat":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_omega or o.is_omega:
            return OMEGA
        return ExtNat(self.value + o.value)

    __radd__ = __add__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = ExtNat(other)
        if not isinstance(other, ExtNat):
            return NotImplemented
        return self.value == other.value

    def __lt__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_omega:
            return False
        if o.is_omega:
            return True
        return self.value < o.value

    def __le__(self, other: Any) -> bool:
        return self == self._coerce(other) or self < other

    def __gt__(self, other: Any) -> bool:
        return not self <= self._coerce(other)

    def __ge__(self, other: Any) -> bool:
        return not self < self._coerce(other)

    def __hash__(self) -> int:
        return hash(("ExtNat", self.value))

    def __int__(self) -> int:
        if self.is_omega:
            raise ValueError("omega is not a finite natural")
        return self.value  # type: ignore[return-value]

    def __str__(self) -> str:
        return "omega" if self.is_omega else str(self.value)

    def __repr__(self) -> str:
        return "OMEGA" if self.is_omega else f"ExtNat({self.value})"


OMEGA = ExtNat(None)


def flatten(obj: Any) -> tuple:
    """Flatten a nested id sequence into a flat tuple of base ids.

    Tuples and lists recurse; everything else is atomic.  Idempotent:
    flatten(flatten(x)) == flatten(x).
    """
    if isinstance(obj, (tuple, list)):
        out: list = []
        for item in obj:
            out.extend(flatten(item))
        return tuple(out)
    return (obj,)


@dataclass(frozen=True)
class Path:
    """An alternating path: edges tagged 0/1 by owning graph.

    Consecutive steps must compose (target meets source) and alternate
    sides; both are asserted on construction.
    """

    steps: tuple[tuple[int, Edge], ...]

    def __post_init__(self) -> None:
        assert self.steps, "a path has at least one edge"
        for (sa, ea), (sb, eb) in zip(self.steps, self.steps[1:]):
            assert ea.tgt == eb.src, f"edges {ea.id!r}, {eb.id!r} do not compose"
            assert sa != sb, f"edges {ea.id!r}, {eb.id!r} do not alternate"

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(e for _, e in self.steps)

    @property
    def sides(self) -> tuple[int, ...]:
        return tuple(s for s, _ in self.steps)

    @property
    def source(self) -> Vertex:
        return self.steps[0][1].src

    @property
    def target(self) -> Vertex:
        return self.steps[-1][1].tgt

    @property
    def flat_id(self) -> tuple:
        """The flattened base-edge-id sequence; the path's identity under
        execution."""
        return flatten(tuple(e.id for _, e in self.steps))

    def __len__(self) -> int:
        return len(self.steps)


DerivedNode = tuple[int, Edge]


def _node_key(node: DerivedNode) -> tuple[str, int]:
    side, edge = node
    return (str(edge.id), side)


@dataclass(frozen=True)
class DerivedGraph:
    """Edges-as-nodes view of an interacting pair.

    Nodes are (side, Edge) with side 0 for the first graph, 1 for the
    second; an arc e -> e' means e' may follow e in an alternating path.
    Initial nodes have their source in the boundary (symmetric difference
    of the vertex sets), final nodes their target.  Initial nodes have no
    incoming arcs and final nodes no outgoing arcs, so boundary-to-boundary
    walks are exactly the maximal finite alternating paths.
    """

    nodes: tuple[DerivedNode, ...]
    arcs: dict[DerivedNode, tuple[DerivedNode, ...]]
    initial: frozenset
    final: frozenset


def derived_graph(g: Graph, h: Graph) -> DerivedGraph:
    boundary = g.vertices ^ h.vertices
    nodes = sorted(
        [(0, e) for e in g.edges] + [(1, e) for e in h.edges], key=_node_key
    )
    by_source: dict[tuple[int, Vertex], list[DerivedNode]] = {}
    for node in nodes:
        side, edge = node
        by_source.setdefault((side, edge.src), []).append(node)
    arcs: dict[DerivedNode, tuple[DerivedNode, ...]] = {}
    for node in nodes:
        side, edge = node
        arcs[node] = tuple(by_source.get((1 - side, edge.tgt), ()))
    initial = frozenset(n for n in nodes if n[1].src in boundary)
    final = frozenset(n for n in nodes if n[1].tgt in boundary)
    return DerivedGraph(tuple(nodes), arcs, initial, final)


def _closure(seeds: Iterable[DerivedNode], succ: dict[DerivedNode, tuple[DerivedNode, ...]]) -> set:
    seen = set(seeds)
    stack = list(seen)
    while stack:
        for m in succ[stack.pop()]:
            if m not in seen:
                seen.add(m)
                stack.append(m)
    return seen


def _find_cycle(nodes: Iterable[DerivedNode], succ: dict[DerivedNode, tuple[DerivedNode, ...]]) -> list[DerivedNode] | None:
    """Return one directed cycle within ``nodes``, or None if acyclic."""
    allowed = set(nodes)
    color: dict[DerivedNode, int] = {}  # 1 = on stack, 2 = done
    for root in sorted(allowed, key=_node_key):
        if color.get(root):
            continue
        stack: list[tuple[DerivedNode, Iterator[DerivedNode]]] = [
            (root, iter(succ[root]))
        ]
        color[root] = 1
        trail = [root]
        while stack:
            node, it = stack[-1]
            advanced = False
            for m in it:
                if m not in allowed:
                    continue
                c = color.get(m)
                if c == 1:
                    return trail[trail.index(m):]
                if c is None:
                    color[m] = 1
                    trail.append(m)
                    stack.append((m, iter(succ[m])))
                    advanced = True
                    break
            if not advanced:
                color[node] = 2
                trail.pop()
                stack.pop()
    return None


def alternating_paths(g: Graph, h: Graph) -> list[Path]:
    """All alternating paths with source AND target in the boundary
    (symmetric difference of the vertex sets) -- equivalently, the finite
    maximal alternating paths.

    Raises InfinitePathSetError when some derived cycle is both reachable
    from a boundary source and co-reachable from a boundary sink, i.e. when
    the path set is infinite.
    """
    dg = derived_graph(g, h)
    reach = _closure(dg.initial, dg.arcs)
    preds: dict[DerivedNode, list[DerivedNode]] = {n: [] for n in dg.nodes}
    for node, succs in dg.arcs.items():
        for m in succs:
            preds[m].append(node)
    coreach = _closure(dg.final, {n: tuple(preds[n]) for n in dg.nodes})
    live = reach & coreach

    cycle = _find_cycle(live, dg.arcs)
    if cycle is not None:
        raise InfinitePathSetError(cycle)

    paths: list[Path] = []
    for start in sorted(dg.initial & live, key=_node_key):
        stack: list[list[DerivedNode]] = [[start]]
        while stack:
            walk = stack.pop()
            tip = walk[-1]
            if tip in dg.final:
                paths.append(Path(tuple(walk)))
                continue
            for m in sorted(dg.arcs[tip], key=_node_key, reverse=True):
                if m in live:
                    stack.append(walk + [m])
    paths.sort(key=lambda p: (len(p), tuple(map(str, p.flat_id))))
    return paths


def _canonical_rotation(seq: tuple[DerivedNode, ...]) -> tuple[DerivedNode, ...]:
    rotations = (seq[i:] + seq[:i] for i in range(len(seq)))
    return min(rotations, key=lambda rot: tuple(_node_key(n) for n in rot))


def _is_periodic(seq: tuple[DerivedNode, ...]) -> bool:
    n = len(seq)
    for d in range(1, n):
        if n % d == 0 and seq == seq[d:] + seq[:d]:
            return True
    return False


def _is_reversal(a: tuple[DerivedNode, ...], b: tuple[DerivedNode, ...]) -> bool:
    """True when b is an edgewise reversal of a up to rotation: after some
    rotation, each step of b traverses an opposite edge (same side, swapped
    endpoints) of the corresponding step of reversed a."""
    n = len(a)
    if len(b) != n:
        return False
    rev = tuple(reversed(a))
    for k in range(n):
        rot = b[k:] + b[:k]
        if all(
            sb == sa and eb.src == ea.tgt and eb.tgt == ea.src
            for (sa, ea), (sb, eb) in zip(rev, rot)
        ):
            return True
    return False


@dataclass(frozen=True)
class CycleClass:
    """An equivalence class of prime alternating cycles.

    ``steps`` is the canonical representative: the lexicographically least
    rotation of the (side, Edge) sequence, edge ids compared as strings.
    In unoriented mode the class also absorbs the edgewise reversal; the
    representative is then the least canonical form over the merged
    classes.
    """

    steps: tuple[tuple[int, Edge], ...]
    mode: str

    def __post_init__(self) -> None:
        assert self.mode in MODES
        n = len(self.steps)
        assert n >= 1
        for i in range(n):
            sa, ea = self.steps[i]
            sb, eb = self.steps[(i + 1) % n]
            assert ea.tgt == eb.src, "cycle steps must chain cyclically"
            assert sa != sb, "cycle steps must alternate cyclically"
        assert self.steps == _canonical_rotation(self.steps), "not canonical"
        assert not _is_periodic(self.steps), "cycle is a proper power"

    @property
    def edge_ids(self) -> tuple[EdgeId, ...]:
        return tuple(e.id for _, e in self.steps)

    def is_own_reversal(self) -> bool:
        return _is_reversal(self.steps, self.steps)

    def __len__(self) -> int:
        return len(self.steps)


def _tarjan_sccs(nodes: Sequence[DerivedNode], succ: dict[DerivedNode, tuple[DerivedNode, ...]]) -> list[list[DerivedNode]]:
    index: dict[DerivedNode, int] = {}
    low: dict[DerivedNode, int] = {}
    on_stack: set = set()
    stack: list[DerivedNode] = []
    sccs: list[list[DerivedNode]] = []
    counter = 0

    for root in nodes:
        if root in index:
            continue
        work: list[tuple[DerivedNode, Iterator[DerivedNode]]] = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for m in it:
                if m not in index:
                    index[m] = low[m] = counter
                    counter += 1
                    stack.append(m)
                    on_stack.add(m)
                    work.append((m, iter(succ[m])))
                    advanced = True
                    break
                if m in on_stack:
                    low[node] = min(low[node], index[m])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                sccs.append(comp)
    return sccs


def prime_cycles(g: Graph, h: Graph, mode: str = DIRECTED) -> list[CycleClass]:
    """All prime alternating-cycle classes between g and h.

    The class set is finite exactly when every strongly connected component
    of the derived graph is trivial or a single simple cycle; otherwise
    InfiniteCycleSetError is raised.  Directed mode counts classes up to
    rotation, unoriented mode additionally identifies edgewise reversals.
    """
    if mode not in MODES:
        raise ValueError(f"unknown cycle mode {mode!r}")
    dg = derived_graph(g, h)
    representatives: list[tuple[DerivedNode, ...]] = []
    for scc in _tarjan_sccs(dg.nodes, dg.arcs):
        members = set(scc)
        if len(scc) == 1:
            # No self-arcs can exist (an arc needs opposite sides), so a
            # singleton component is trivial.
            continue
        for node in scc:
            inside = [m for m in dg.arcs[node] if m in members]
            if len(inside) > 1:
                raise InfiniteCycleSetError(node, inside)
        start = min(scc, key=_node_key)
        cycle = [start]
        node = start
        while True:
            node = next(m for m in dg.arcs[node] if m in members)
            if node == start:
                break
            cycle.append(node)
        representatives.append(_canonical_rotation(tuple(cycle)))

    representatives.sort(key=lambda seq: tuple(_node_key(n) for n in seq))
    if mode == DIRECTED:
        return [CycleClass(seq, DIRECTED) for seq in representatives]

    # Merge reversal partners.  In the finite regime each class has at most
    # one reversal partner (two distinct concrete reversals would splice
    # into a component with two simple cycles, contradicting finiteness).
    merged: list[CycleClass] = []
    used = [False] * len(representatives)
    for i, seq in enumerate(representatives):
        if used[i]:
            continue
        used[i] = True
        partners = [
            j
            for j in range(i + 1, len(representatives))
            if not used[j] and _is_reversal(seq, representatives[j])
        ]
        # two distinct partners would be positionwise-parallel and splice
        # into a component with two simple cycles, contradicting finiteness
        assert len(partners) <= 1
        for j in partners:
            used[j] = True
        # representatives are sorted, so seq is the least canonical form of
        # the merged pair.
        merged.append(CycleClass(seq, UNORIENTED))
    return merged
