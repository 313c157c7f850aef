"""
Execution of interaction graphs and the prime-cycle measure.

Executing two graphs plugs them along their shared vertices: the result
lives on the symmetric difference of the vertex sets and has one edge per
boundary-to-boundary alternating path.  Each produced edge carries its
flattened base-edge sequence as its id, so nested executions normalise to
directly comparable graphs.

The two checkers verify, on concrete triples, the identities that make
execution compose well: associativity of execution, and the trefoil
property relating the four prime-cycle counts arising from the two ways
of plugging three graphs together.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .graph import (
    DIRECTED,
    OMEGA,
    ExtNat,
    Graph,
    GraphError,
    InfiniteCycleSetError,
    alternating_paths,
    flatten,
    prime_cycles,
)


class PreconditionViolationError(GraphError):
    pass


def execute(g: Graph, h: Graph) -> Graph:
    """Plug g and h together: vertices are the symmetric difference, edges
    the boundary-to-boundary alternating paths (flattened ids).

    Raises InfinitePathSetError when the path set is infinite.
    """
    paths = alternating_paths(g, h)
    boundary = g.vertices ^ h.vertices
    return Graph(boundary, [(p.flat_id, p.source, p.target) for p in paths])


def measure(g: Graph, h: Graph, mode: str = DIRECTED) -> ExtNat:
    """Number of prime alternating-cycle classes between g and h in the
    given mode; omega when the cycle set is infinite."""
    try:
        return ExtNat(len(prime_cycles(g, h, mode)))
    except InfiniteCycleSetError:
        return OMEGA


def normal_form(g: Graph) -> tuple[frozenset, tuple]:
    """Comparison form of a graph: vertex set plus the sorted multiset of
    (flattened id, source, target) edges."""
    edges = sorted(
        ((flatten(e.id), e.src, e.tgt) for e in g.edges),
        key=lambda t: (tuple(map(str, t[0])), str(t[1]), str(t[2])),
    )
    return (g.vertices, tuple(edges))


def graphs_equal_flattened(g: Graph, h: Graph) -> bool:
    """Equality after flattening edge ids (vertices and edge multisets)."""
    return normal_form(g) == normal_form(h)


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity check: verdict plus enough context to see
    why (counts on success, both sides' data on failure)."""

    check: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def render_text(self) -> str:
        lines = [f"{self.check}: {self.verdict}"]
        for key in sorted(self.details):
            lines.append(f"  {key} = {self.details[key]}")
        return "\n".join(lines)

    def render_line(self) -> str:
        parts = [f"check={self.check}", f"verdict={self.verdict}"]
        parts += [f"{k}={self.details[k]}" for k in sorted(self.details)]
        return " ".join(str(p).replace("\n", " ") for p in parts)


def _require_empty_triple_intersection(f: Graph, g: Graph, h: Graph) -> None:
    common = f.vertices & g.vertices & h.vertices
    if common:
        raise PreconditionViolationError(
            f"triple vertex intersection must be empty, got {sorted(map(str, common))}"
        )


def check_associativity(f: Graph, g: Graph, h: Graph) -> CheckReport:
    """Compare the flattened normal forms of (f::g)::h and f::(g::h).

    Requires an empty triple vertex intersection; propagates
    InfinitePathSetError when an intermediate path set is infinite.
    """
    _require_empty_triple_intersection(f, g, h)
    left = execute(execute(f, g), h)
    right = execute(f, execute(g, h))
    lform = normal_form(left)
    rform = normal_form(right)
    passed = lform == rform
    details: dict[str, Any] = {
        "vertices": len(left.vertices),
        "edges_left": len(left.edges),
        "edges_right": len(right.edges),
    }
    if not passed:
        details["left_form"] = lform
        details["right_form"] = rform
    return CheckReport("associativity", passed, details)


def check_trefoil(f: Graph, g: Graph, h: Graph, mode: str = DIRECTED) -> CheckReport:
    """Verify |C(f, g::h)| + |C(g, h)| = |C(h, f::g)| + |C(f, g)|.

    Requires an empty triple vertex intersection; raises
    InfiniteCycleSetError / InfinitePathSetError when any of the four cycle
    sets or the two inner executions is infinite.
    """
    _require_empty_triple_intersection(f, g, h)
    gh = execute(g, h)
    fg = execute(f, g)
    n_f_gh = len(prime_cycles(f, gh, mode))
    n_g_h = len(prime_cycles(g, h, mode))
    n_h_fg = len(prime_cycles(h, fg, mode))
    n_f_g = len(prime_cycles(f, g, mode))
    passed = n_f_gh + n_g_h == n_h_fg + n_f_g
    details = {
        "mode": mode,
        "cycles(F,G::H)": n_f_gh,
        "cycles(G,H)": n_g_h,
        "cycles(H,F::G)": n_h_fg,
        "cycles(F,G)": n_f_g,
        "lhs": n_f_gh + n_g_h,
        "rhs": n_h_fg + n_f_g,
    }
    return CheckReport("trefoil", passed, details)
