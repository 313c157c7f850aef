"""
Line-oriented text formats for instances, and DOT rendering.

One declaration per line, `#` starts a comment.  Graphs:

    graph NAME
    vertex a
    edge e a b

Projects add `wager <n|omega>` to a graph block.  Cobordisms:

    cob NAME
    left a1 a2 a3
    right b1 b2 b3
    pair a1 b3
    pair L:b1 R:b2
    circles 2

`pair` points may carry `L:`/`R:` prefixes; a bare label is accepted when
it names a point on exactly one side.  Bimodular graphs extend the graph
block:

    group v cyclic:2
    group w table e,a;a,e
    laction v w 1 e2 e1
    raction v w 1 e1 e2

The Cayley `table` lists rows separated by `;`, entries by `,`; its first
row doubles as the element list.  Action lines give the images of the
edges from v to w in their declaration order, for one group element.

Every id written by the renderers is a whitespace-free token; composite
edge ids (flattened path sequences) are dot-joined for display.
"""

from __future__ import annotations

from typing import Any

from .bimodular import BimodularGraph, FiniteGroup, cyclic_group
from .cob0 import Cob0Morphism, source_point, target_point
from .graph import ExtNat, Graph, GraphError, OMEGA
from .interaction import Project


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}")


def _directives(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        yield lineno, parts[0], parts[1:]


def vertex_token(v: Any) -> str:
    if isinstance(v, tuple) and len(v) == 2 and v[0] in ("dom", "cod", "mid"):
        return f"{v[0]}:{v[1]}"
    return str(v)


def id_token(edge_id: Any) -> str:
    if isinstance(edge_id, tuple):
        return ".".join(id_token(x) for x in edge_id)
    return str(edge_id)


def parse_graph(text: str) -> tuple[str, Graph]:
    name, graph, _ = _parse_graph_block(text, allow=())
    return name, graph


def _parse_graph_block(text: str, allow: tuple[str, ...]):
    """Parse graph directives, collecting any directives named in ``allow``
    for the caller."""
    name = None
    vertices: list = []
    vertex_set: set = set()
    edges: list[tuple] = []
    edge_ids: set = set()
    extra: list[tuple[int, str, list[str]]] = []
    for lineno, directive, args in _directives(text):
        if directive == "graph":
            if len(args) != 1:
                raise ParseError("graph expects exactly one name", lineno)
            if name is not None:
                raise ParseError("duplicate graph declaration", lineno)
            name = args[0]
        elif directive == "vertex":
            if len(args) != 1:
                raise ParseError("vertex expects exactly one id", lineno)
            vertices.append(args[0])
            vertex_set.add(args[0])
        elif directive == "edge":
            if len(args) != 3:
                raise ParseError("edge expects <id> <src> <tgt>", lineno)
            eid, src, tgt = args
            if eid in edge_ids:
                raise ParseError(f"duplicate edge id {eid!r}", lineno)
            if src not in vertex_set:
                raise ParseError(f"edge {eid!r}: unknown source vertex {src!r}", lineno)
            if tgt not in vertex_set:
                raise ParseError(f"edge {eid!r}: unknown target vertex {tgt!r}", lineno)
            edge_ids.add(eid)
            edges.append((eid, src, tgt))
        elif directive in allow:
            extra.append((lineno, directive, args))
        else:
            raise ParseError(f"unknown directive {directive!r}", lineno)
    if name is None:
        raise ParseError("missing graph declaration")
    return name, Graph(vertices, edges), extra


def render_graph(name: str, graph: Graph) -> str:
    lines = [f"graph {name}"]
    for v in sorted(graph.vertices, key=vertex_token):
        lines.append(f"vertex {vertex_token(v)}")
    for e in sorted(graph.edges, key=lambda e: id_token(e.id)):
        lines.append(f"edge {id_token(e.id)} {vertex_token(e.src)} {vertex_token(e.tgt)}")
    return "\n".join(lines) + "\n"


def parse_project(text: str) -> tuple[str, Project]:
    name, graph, extra = _parse_graph_block(text, allow=("wager",))
    wager = ExtNat(0)
    seen = False
    for lineno, _, args in extra:
        if seen:
            raise ParseError("duplicate wager declaration", lineno)
        if len(args) != 1:
            raise ParseError("wager expects one value", lineno)
        seen = True
        if args[0] == "omega":
            wager = OMEGA
        elif args[0].isdigit():
            wager = ExtNat(int(args[0]))
        else:
            raise ParseError(f"wager must be a natural number or omega, got {args[0]!r}", lineno)
    return name, Project(wager, graph)


def render_project(name: str, project: Project) -> str:
    return render_graph(name, project.graph) + f"wager {project.wager}\n"


def _resolve_point(token: str, left: set, right: set, lineno: int):
    if token.startswith("L:"):
        label = token[2:]
        if label not in left:
            raise ParseError(f"unknown left point {label!r}", lineno)
        return source_point(label)
    if token.startswith("R:"):
        label = token[2:]
        if label not in right:
            raise ParseError(f"unknown right point {label!r}", lineno)
        return target_point(label)
    in_left = token in left
    in_right = token in right
    if in_left and in_right:
        raise ParseError(f"point {token!r} is ambiguous, use L:/R: prefix", lineno)
    if in_left:
        return source_point(token)
    if in_right:
        return target_point(token)
    raise ParseError(f"unknown boundary point {token!r}", lineno)


def parse_cobordism(text: str) -> tuple[str, Cob0Morphism]:
    name = None
    left: set = set()
    right: set = set()
    pair_lines: list[tuple[int, list[str]]] = []
    circles = 0
    for lineno, directive, args in _directives(text):
        if directive == "cob":
            if len(args) != 1:
                raise ParseError("cob expects exactly one name", lineno)
            name = args[0]
        elif directive == "left":
            left.update(args)
        elif directive == "right":
            right.update(args)
        elif directive == "pair":
            if len(args) != 2:
                raise ParseError("pair expects exactly two points", lineno)
            pair_lines.append((lineno, args))
        elif directive == "circles":
            if len(args) != 1 or not args[0].isdigit():
                raise ParseError("circles expects one natural number", lineno)
            circles = int(args[0])
        else:
            raise ParseError(f"unknown directive {directive!r}", lineno)
    if name is None:
        raise ParseError("missing cob declaration")
    pairs = []
    for lineno, (p, q) in pair_lines:
        pairs.append(
            (_resolve_point(p, left, right, lineno), _resolve_point(q, left, right, lineno))
        )
    try:
        morphism = Cob0Morphism(
            frozenset(left),
            frozenset(right),
            frozenset(frozenset(pair) for pair in pairs),
            circles,
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return name, morphism


def _point_token(point: tuple[str, Any]) -> str:
    side, label = point
    return f"{'L' if side == 'src' else 'R'}:{label}"


def render_cobordism(name: str, m: Cob0Morphism) -> str:
    lines = [f"cob {name}"]
    if m.source:
        lines.append("left " + " ".join(sorted(map(str, m.source))))
    if m.target:
        lines.append("right " + " ".join(sorted(map(str, m.target))))
    for pair in sorted(m.pairs, key=lambda p: sorted(map(_point_token, p))):
        p, q = sorted(pair, key=_point_token)
        lines.append(f"pair {_point_token(p)} {_point_token(q)}")
    lines.append(f"circles {m.circles}")
    return "\n".join(lines) + "\n"


def _parse_group(desc: list[str], lineno: int) -> FiniteGroup:
    if len(desc) == 1 and desc[0].startswith("cyclic:"):
        try:
            k = int(desc[0].split(":", 1)[1])
        except ValueError:
            raise ParseError(f"bad cyclic group descriptor {desc[0]!r}", lineno)
        return cyclic_group(k)
    if desc and desc[0] == "table":
        if len(desc) != 2:
            raise ParseError("table expects one row-list argument", lineno)
        rows = [row.split(",") for row in desc[1].split(";")]
        elements = rows[0]
        if len(rows) != len(elements):
            raise ParseError("Cayley table must be square", lineno)
        table = {}
        for i, row in enumerate(rows):
            if len(row) != len(elements):
                raise ParseError("Cayley table must be square", lineno)
            for j, entry in enumerate(row):
                table[(elements[i], elements[j])] = entry
        try:
            return FiniteGroup("table", elements, table)
        except ValueError as exc:
            raise ParseError(f"not a group: {exc}", lineno) from exc
    raise ParseError("group expects cyclic:<k> or table <rows>", lineno)


def parse_bimodular(text: str) -> tuple[str, BimodularGraph]:
    name, graph, extra = _parse_graph_block(
        text, allow=("group", "laction", "raction")
    )
    groups: dict = {}
    left: dict = {}
    right: dict = {}
    for lineno, directive, args in extra:
        if directive == "group":
            if len(args) < 2:
                raise ParseError("group expects <vertex> <descriptor>", lineno)
            v = args[0]
            if v not in graph.vertices:
                raise ParseError(f"group for unknown vertex {v!r}", lineno)
            groups[v] = _parse_group(args[1:], lineno)
        else:
            if len(args) < 3:
                raise ParseError(f"{directive} expects <v> <v'> <g> <images...>", lineno)
            v, w, g = args[0], args[1], args[2]
            images = args[3:]
            edge_ids = [e.id for e in graph.edges if (e.src, e.tgt) == (v, w)]
            if not edge_ids:
                raise ParseError(f"no edges from {v!r} to {w!r}", lineno)
            if len(images) != len(edge_ids):
                raise ParseError(
                    f"expected {len(edge_ids)} images for edges {v!r}->{w!r}, "
                    f"got {len(images)}",
                    lineno,
                )
            perm = dict(zip(edge_ids, images))
            target = left if directive == "laction" else right
            target.setdefault((v, w), {})[g] = perm
    try:
        bg = BimodularGraph(graph, groups, left, right)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
    return name, bg


def render_bimodular(name: str, bg: BimodularGraph) -> str:
    out = [render_graph(name, bg.graph).rstrip("\n")]
    for v in sorted(bg.graph.vertices, key=vertex_token):
        grp = bg.groups[v]
        if grp.is_trivial():
            continue
        if grp.name.startswith("cyclic:"):
            out.append(f"group {vertex_token(v)} {grp.name}")
        else:
            order = list(grp.elements)
            rows = [
                ",".join(grp.mul(a, b) for b in order) for a in order
            ]
            out.append(f"group {vertex_token(v)} table {';'.join(rows)}")
    for tag, tables in (("laction", bg.left), ("raction", bg.right)):
        for (v, w), per_element in sorted(tables.items(), key=lambda kv: str(kv[0])):
            # image order must follow render_graph's edge order for round-trips
            edge_ids = sorted(bg.edge_set(v, w), key=id_token)
            for g in sorted(per_element):
                perm = per_element[g]
                if all(perm[eid] == eid for eid in edge_ids):
                    continue
                images = " ".join(id_token(perm[eid]) for eid in edge_ids)
                out.append(
                    f"{tag} {vertex_token(v)} {vertex_token(w)} {g} {images}"
                )
    return "\n".join(out) + "\n"


def to_dot(name: str, graph: Graph) -> str:
    """DOT rendering; opposite edge pairs collapse to one dir=both edge."""
    lines = [f'digraph "{name}" {{']
    for v in sorted(graph.vertices, key=vertex_token):
        lines.append(f'  "{vertex_token(v)}";')
    remaining = sorted(graph.edges, key=lambda e: id_token(e.id))
    used: set = set()
    by_endpoints: dict = {}
    for e in remaining:
        by_endpoints.setdefault((e.src, e.tgt), []).append(e)
    for e in remaining:
        if e.id in used:
            continue
        used.add(e.id)
        partner = None
        for cand in by_endpoints.get((e.tgt, e.src), []):
            if cand.id not in used:
                partner = cand
                break
        if partner is not None:
            used.add(partner.id)
            lines.append(
                f'  "{vertex_token(e.src)}" -> "{vertex_token(e.tgt)}" '
                f'[dir=both, label="{id_token(e.id)} / {id_token(partner.id)}"];'
            )
        else:
            lines.append(
                f'  "{vertex_token(e.src)}" -> "{vertex_token(e.tgt)}" '
                f'[label="{id_token(e.id)}"];'
            )
    lines.append("}")
    return "\n".join(lines) + "\n"
