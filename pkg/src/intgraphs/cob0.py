"""
One-dimensional cobordisms in combinatorial form.

Objects are finite point sets; a morphism from A to B is a disjoint union
of segments and circles whose boundary is A + B.  Up to the structure that
matters here this is exactly a perfect matching on the tagged disjoint
union of A and B (the segments) plus a count of closed circles.  Boundary
points carry side tags, so A and B may reuse labels, and a pair may sit
entirely inside one side.

Composition glues along the shared middle object by chain-chasing: from
each outer boundary point, alternately follow the two matchings through
the middle until another outer point is reached.  Middle points not on any
such open chain lie on closed alternating chains, each of which becomes a
new circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Iterator

from .graph import GraphError
from .interaction import InterfaceMismatchError

SRC = "src"
TGT = "tgt"

TaggedPoint = tuple[str, Any]


class NotACompositeError(GraphError):
    pass


def source_point(label: Any) -> TaggedPoint:
    return (SRC, label)


def target_point(label: Any) -> TaggedPoint:
    return (TGT, label)


@dataclass(frozen=True)
class Cob0Morphism:
    """A perfect matching on the tagged boundary points plus a circle count."""

    source: frozenset
    target: frozenset
    pairs: frozenset[frozenset]
    circles: int = 0

    def __post_init__(self) -> None:
        if self.circles < 0:
            raise ValueError("circle count must be >= 0")
        points = {source_point(a) for a in self.source} | {
            target_point(b) for b in self.target
        }
        seen: set = set()
        for pair in self.pairs:
            if len(pair) != 2:
                raise ValueError(f"pair {set(pair)!r} must contain two distinct points")
            for p in pair:
                if p not in points:
                    raise ValueError(f"pair references unknown boundary point {p!r}")
                if p in seen:
                    raise ValueError(f"boundary point {p!r} occurs in two pairs")
                seen.add(p)
        if seen != points:
            missing = points - seen
            raise ValueError(
                f"matching must cover every boundary point, missing {sorted(map(str, missing))}"
            )

    def mate(self, point: TaggedPoint) -> TaggedPoint:
        for pair in self.pairs:
            if point in pair:
                (other,) = pair - {point}
                return other
        raise KeyError(point)


def _pairs_from(pairs: Iterable[Iterable[TaggedPoint]]) -> frozenset:
    return frozenset(frozenset(p) for p in pairs)


def cob0_morphism(
    source: Iterable[Any],
    target: Iterable[Any],
    pairs: Iterable[Iterable[TaggedPoint]],
    circles: int = 0,
) -> Cob0Morphism:
    return Cob0Morphism(frozenset(source), frozenset(target), _pairs_from(pairs), circles)


def cob0_identity(points: Iterable[Any]) -> Cob0Morphism:
    pts = frozenset(points)
    return Cob0Morphism(
        pts,
        pts,
        _pairs_from((source_point(a), target_point(a)) for a in pts),
        0,
    )


def _involution(m: Cob0Morphism, rename_src, rename_tgt) -> dict:
    """The matching as a point -> point map, with boundary points renamed
    into the composite's unified namespace."""
    send = lambda p: rename_src(p[1]) if p[0] == SRC else rename_tgt(p[1])
    table: dict = {}
    for pair in m.pairs:
        p, q = tuple(pair)
        table[send(p)] = send(q)
        table[send(q)] = send(p)
    return table


def _chase(
    m_inv: dict, n_inv: dict, start, start_in_m: bool
) -> tuple[Any, list[tuple[str, Any, Any]]]:
    """Follow alternating matchings from an outer point until another outer
    point is reached.  Returns the endpoint and the chain of segments as
    (tag, point, point) steps."""
    segments: list[tuple[str, Any, Any]] = []
    cur = start
    use_m = start_in_m
    while True:
        table, tag = (m_inv, "M") if use_m else (n_inv, "N")
        nxt = table[cur]
        segments.append((tag, cur, nxt))
        if not (isinstance(nxt, tuple) and nxt[0] == "B"):
            return nxt, segments
        cur = nxt
        use_m = not use_m


def cob0_compose(m: Cob0Morphism, n: Cob0Morphism) -> Cob0Morphism:
    """Glue m and n along their shared boundary.

    Open chains through the middle become the composite's pairs; closed
    chains each contribute one circle on top of the operands' counts.
    """
    if m.target != n.source:
        raise InterfaceMismatchError(
            f"target {sorted(map(str, m.target))} does not match "
            f"source {sorted(map(str, n.source))}"
        )
    a_pt = lambda x: ("A", x)
    b_pt = lambda x: ("B", x)
    c_pt = lambda x: ("C", x)
    m_inv = _involution(m, a_pt, b_pt)
    n_inv = _involution(n, b_pt, c_pt)

    outer = [a_pt(x) for x in sorted(m.source, key=str)] + [
        c_pt(x) for x in sorted(n.target, key=str)
    ]
    visited: set = set()
    new_pairs = []
    for p in outer:
        if p in visited:
            continue
        end, segments = _chase(m_inv, n_inv, p, start_in_m=(p[0] == "A"))
        visited.update({p, end})
        visited.update(pt for _, x, y in segments for pt in (x, y))
        new_pairs.append((p, end))

    closed = 0
    for b in sorted((b_pt(x) for x in m.target), key=str):
        if b in visited:
            continue
        closed += 1
        cur = b
        use_m = True
        while True:
            visited.add(cur)
            cur = (m_inv if use_m else n_inv)[cur]
            use_m = not use_m
            if cur == b and use_m:
                break

    untag = lambda p: source_point(p[1]) if p[0] == "A" else target_point(p[1])
    return Cob0Morphism(
        m.source,
        n.target,
        _pairs_from((untag(p), untag(q)) for p, q in new_pairs),
        m.circles + n.circles + closed,
    )


@dataclass(frozen=True)
class AlternatingDecomposition:
    """The chain of operand segments realising one composite segment.

    Tags alternate strictly between the two operands.
    """

    segments: tuple[tuple[str, frozenset], ...]

    def __post_init__(self) -> None:
        assert self.segments
        tags = [tag for tag, _ in self.segments]
        assert all(x != y for x, y in zip(tags, tags[1:])), "tags must alternate"

    @property
    def tags(self) -> tuple[str, ...]:
        return tuple(tag for tag, _ in self.segments)


def decompose_segment(
    m: Cob0Morphism, n: Cob0Morphism, composite_pair: frozenset
) -> AlternatingDecomposition:
    """Recover the unique alternating chain of m/n segments realising one
    pair of the composite m;n."""
    composite = cob0_compose(m, n)
    pair = frozenset(composite_pair)
    if pair not in composite.pairs:
        raise NotACompositeError(f"{set(pair)!r} is not a pair of the composite")

    a_pt = lambda x: ("A", x)
    b_pt = lambda x: ("B", x)
    c_pt = lambda x: ("C", x)
    m_inv = _involution(m, a_pt, b_pt)
    n_inv = _involution(n, b_pt, c_pt)

    start_tagged = min(pair, key=str)
    start = a_pt(start_tagged[1]) if start_tagged[0] == SRC else c_pt(start_tagged[1])
    _, segments = _chase(m_inv, n_inv, start, start_in_m=(start[0] == "A"))

    def original(tag: str, x, y) -> frozenset:
        back = (
            (lambda p: source_point(p[1]) if p[0] == "A" else target_point(p[1]))
            if tag == "M"
            else (lambda p: source_point(p[1]) if p[0] == "B" else target_point(p[1]))
        )
        return frozenset({back(x), back(y)})

    return AlternatingDecomposition(
        tuple((tag, original(tag, x, y)) for tag, x, y in segments)
    )


def _matchings(points: list) -> Iterator[frozenset]:
    if not points:
        yield frozenset()
        return
    first, rest = points[0], points[1:]
    for i, other in enumerate(rest):
        pair = frozenset({first, other})
        remaining = rest[:i] + rest[i + 1:]
        for sub in _matchings(remaining):
            yield sub | {pair}


def cob0_enumerate(
    source: Iterable[Any], target: Iterable[Any], max_circles: int
) -> list[Cob0Morphism]:
    """Every morphism from source to target with at most max_circles
    circles: all (|A|+|B|-1)!! perfect matchings times each circle count.

    Empty when |A|+|B| is odd.
    """
    src = frozenset(source)
    tgt = frozenset(target)
    points = sorted(
        [source_point(a) for a in src] + [target_point(b) for b in tgt], key=str
    )
    if len(points) % 2 == 1:
        return []
    out = []
    for matching in _matchings(points):
        for circles in range(max_circles + 1):
            out.append(Cob0Morphism(src, tgt, frozenset(matching), circles))
    return out
