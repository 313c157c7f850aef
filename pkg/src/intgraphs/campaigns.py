"""
Randomized and exhaustive verification campaigns.

Each campaign runs many independent trials of one identity check and
aggregates verdicts.  All randomness flows from a single seed through a
per-trial generator keyed by (seed, trial index), so runs are reproducible
and trials are order-independent.  Instances whose path or cycle sets come
out infinite are counted as skips, never silently dropped.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .bimodular import BimodularGraph, bimod_execute, check_well_defined, cyclic_group
from .cob0 import cob0_compose, cob0_enumerate, cob0_identity
from .execution import (
    CheckReport,
    check_associativity,
    check_trefoil,
    execute,
    graphs_equal_flattened,
)
from .formats import render_bimodular, render_cobordism, render_graph
from .functor import check_faithfulness, check_functoriality
from .graph import Graph, InfiniteCycleSetError, InfinitePathSetError
from .interaction import IntMorphism, cod_vertex, dom_vertex

_SEED_STRIDE = 1_000_003


def trial_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed * _SEED_STRIDE + index)


@dataclass
class CampaignResult:
    """Aggregate outcome of a campaign: per-trial verdict counts plus the
    first counterexample, serialized for replay."""

    name: str
    trials: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    elapsed: float = 0.0
    counterexample: str | None = None
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def verdict(self) -> str:
        return "PASS" if self.ok else "FAIL"

    def render_text(self) -> str:
        # timing stays out of the report so identical seeds give
        # byte-identical output
        lines = [
            f"{self.name}: {self.verdict}",
            f"  trials  = {self.trials}",
            f"  passed  = {self.passed}",
            f"  failed  = {self.failed}",
            f"  skipped = {self.skipped} (infinite instances)",
        ]
        for key in sorted(self.notes):
            lines.append(f"  {key} = {self.notes[key]}")
        if self.counterexample:
            lines.append("counterexample (replayable):")
            lines.append(self.counterexample)
        return "\n".join(lines)

    def render_line(self) -> str:
        parts = [
            f"campaign={self.name}",
            f"verdict={self.verdict}",
            f"trials={self.trials}",
            f"passed={self.passed}",
            f"failed={self.failed}",
            f"skipped={self.skipped}",
        ]
        parts += [f"{k}={self.notes[k]}" for k in sorted(self.notes)]
        return " ".join(parts)


def random_graph(
    rng: random.Random, vertices: list, max_edges: int, prefix: str
) -> Graph:
    n = rng.randint(0, max_edges) if vertices else 0
    edges = [
        (f"{prefix}{i}", rng.choice(vertices), rng.choice(vertices))
        for i in range(n)
    ]
    return Graph(vertices, edges)


def random_triple(
    rng: random.Random, max_vertices: int = 8, max_edges: int = 8
) -> tuple[Graph, Graph, Graph]:
    """Three random graphs over one vertex universe with an empty triple
    intersection."""
    universe = [f"v{i}" for i in range(rng.randint(1, max_vertices))]
    membership: dict[str, tuple[bool, bool, bool]] = {}
    for v in universe:
        while True:
            bits = (rng.random() < 0.6, rng.random() < 0.6, rng.random() < 0.6)
            if not all(bits):
                membership[v] = bits
                break
    parts = []
    for i, prefix in enumerate(("f", "g", "h")):
        verts = [v for v in universe if membership[v][i]]
        parts.append(random_graph(rng, verts, max_edges, prefix))
    return parts[0], parts[1], parts[2]


def random_pair(
    rng: random.Random, max_vertices: int = 5, max_edges: int = 8
) -> tuple[Graph, Graph]:
    universe = [f"v{i}" for i in range(rng.randint(1, max_vertices))]
    out = []
    for prefix in ("f", "g"):
        verts = [v for v in universe if rng.random() < 0.7]
        out.append(random_graph(rng, verts, max_edges, prefix))
    return out[0], out[1]


def random_int_morphism(
    rng: random.Random, max_points: int = 3, max_edges: int = 6, prefix: str = "e"
) -> IntMorphism:
    dom = frozenset(f"a{i}" for i in range(rng.randint(0, max_points)))
    cod = frozenset(f"b{i}" for i in range(rng.randint(0, max_points)))
    vertices = [dom_vertex(a) for a in sorted(dom)] + [
        cod_vertex(b) for b in sorted(cod)
    ]
    n = rng.randint(0, max_edges) if vertices else 0
    edges = [
        (f"{prefix}{i}", rng.choice(vertices), rng.choice(vertices))
        for i in range(n)
    ]
    return IntMorphism(dom, cod, Graph(vertices, edges))


def _campaign(name: str, trials: int, seed: int, run_one) -> CampaignResult:
    result = CampaignResult(name=name, trials=trials)
    start = time.perf_counter()
    for index in range(trials):
        rng = trial_rng(seed, index)
        try:
            report, replay = run_one(rng)
        except (InfinitePathSetError, InfiniteCycleSetError):
            result.skipped += 1
            continue
        if report.passed:
            result.passed += 1
        else:
            result.failed += 1
            if result.counterexample is None:
                result.counterexample = replay()
    result.elapsed = time.perf_counter() - start
    return result


def _render_triple(f: Graph, g: Graph, h: Graph) -> str:
    return (
        render_graph("F", f) + "\n" + render_graph("G", g) + "\n" + render_graph("H", h)
    )


def campaign_associativity(
    trials: int = 1000, seed: int = 42, max_vertices: int = 8, max_edges: int = 8
) -> CampaignResult:
    def run_one(rng):
        f, g, h = random_triple(rng, max_vertices, max_edges)
        report = check_associativity(f, g, h)
        return report, lambda: _render_triple(f, g, h)

    return _campaign("associativity", trials, seed, run_one)


def campaign_trefoil(
    trials: int = 1000,
    seed: int = 42,
    max_vertices: int = 8,
    max_edges: int = 8,
    mode: str = "directed",
) -> CampaignResult:
    def run_one(rng):
        f, g, h = random_triple(rng, max_vertices, max_edges)
        report = check_trefoil(f, g, h, mode)
        return report, lambda: _render_triple(f, g, h)

    return _campaign("trefoil", trials, seed, run_one)


def _objects_up_to(bound: int) -> list[frozenset]:
    return [frozenset(f"p{i}" for i in range(k)) for k in range(bound + 1)]


def campaign_cob0_laws(bound: int = 3, max_circles: int = 1) -> CampaignResult:
    """Exhaustive category laws: both identity laws on every morphism, and
    associativity of gluing (matching and circle arithmetic) over all
    composable triples with every object of size <= bound."""
    result = CampaignResult(name="cob0-laws")
    start = time.perf_counter()
    objects = _objects_up_to(bound)
    homs = {
        (a, b): cob0_enumerate(a, b, max_circles)
        for a, b in itertools.product(objects, repeat=2)
    }
    assoc_checked = 0
    ident_checked = 0
    for (a, b), morphisms in homs.items():
        for m in morphisms:
            result.trials += 1
            ident_checked += 1
            if (
                cob0_compose(cob0_identity(a), m) == m
                and cob0_compose(m, cob0_identity(b)) == m
            ):
                result.passed += 1
            else:
                result.failed += 1
                if result.counterexample is None:
                    result.counterexample = render_cobordism("M", m)
    for a, b, c, d in itertools.product(objects, repeat=4):
        if not (homs[(a, b)] and homs[(b, c)] and homs[(c, d)]):
            continue
        for m, n, p in itertools.product(homs[(a, b)], homs[(b, c)], homs[(c, d)]):
            result.trials += 1
            assoc_checked += 1
            if cob0_compose(cob0_compose(m, n), p) == cob0_compose(
                m, cob0_compose(n, p)
            ):
                result.passed += 1
            else:
                result.failed += 1
                if result.counterexample is None:
                    result.counterexample = (
                        render_cobordism("M", m)
                        + "\n"
                        + render_cobordism("N", n)
                        + "\n"
                        + render_cobordism("P", p)
                    )
    result.notes["associativity_triples"] = assoc_checked
    result.notes["identity_morphisms"] = ident_checked
    result.elapsed = time.perf_counter() - start
    return result


def campaign_functor(bound: int = 3, max_circles: int = 2) -> CampaignResult:
    """Exhaustive functoriality over composable pairs: graph equality and
    the circle-count equation, with directed = 2 x unoriented demanded on
    every composition."""
    result = CampaignResult(name="functor")
    start = time.perf_counter()
    objects = _objects_up_to(bound)
    two_to_one_all = True
    for a, b, c in itertools.product(objects, repeat=3):
        for m in cob0_enumerate(a, b, max_circles):
            for n in cob0_enumerate(b, c, max_circles):
                result.trials += 1
                report = check_functoriality(m, n)
                two_to_one = report.details["directed_is_twice_unoriented"]
                two_to_one_all = two_to_one_all and two_to_one
                if report.passed and two_to_one:
                    result.passed += 1
                else:
                    result.failed += 1
                    if result.counterexample is None:
                        result.counterexample = (
                            render_cobordism("M", m) + "\n" + render_cobordism("N", n)
                        )
    result.notes["directed_is_twice_unoriented"] = two_to_one_all
    result.elapsed = time.perf_counter() - start
    return result


def campaign_faithful(total_bound: int = 6, max_circles: int = 2) -> CampaignResult:
    """Injectivity of the wagered functor on every hom-set with
    |A| + |B| <= total_bound, recording image counts per boundary size."""
    result = CampaignResult(name="faithful")
    start = time.perf_counter()
    images_by_size: dict[int, int] = {}
    for total in range(0, total_bound + 1):
        for a_size in range(0, total + 1):
            b_size = total - a_size
            a = frozenset(f"a{i}" for i in range(a_size))
            b = frozenset(f"b{i}" for i in range(b_size))
            report = check_faithfulness(a, b, max_circles)
            result.trials += 1
            if report.passed:
                result.passed += 1
            else:
                result.failed += 1
                if result.counterexample is None:
                    result.counterexample = report.render_text()
            if report.details["hom_size"]:
                images_by_size[total] = max(
                    images_by_size.get(total, 0), report.details["distinct_images"]
                )
    result.notes["images_by_boundary_size"] = dict(sorted(images_by_size.items()))
    result.elapsed = time.perf_counter() - start
    return result


def campaign_bimod_degeneracy(
    trials: int = 500, seed: int = 42, max_vertices: int = 5, max_edges: int = 6
) -> CampaignResult:
    """With all groups trivial, bimodular execution must equal plain
    execution of the underlying graphs."""

    def run_one(rng):
        f, g = random_pair(rng, max_vertices, max_edges)
        result = bimod_execute(BimodularGraph(f), BimodularGraph(g))
        plain = execute(f, g)
        ok = graphs_equal_flattened(result.graph, plain)

        def replay():
            return render_graph("F", f) + "\n" + render_graph("G", g)

        return CheckReport("bimod-degeneracy", ok, {}), replay

    return _campaign("bimod-degeneracy", trials, seed, run_one)


def _all_perms(ids: list) -> list[dict]:
    return [dict(zip(ids, image)) for image in itertools.permutations(ids)]


def _perm_power(perm: dict, k: int) -> dict:
    out = {x: x for x in perm}
    for _ in range(k):
        out = {x: perm[out[x]] for x in out}
    return out


def _perm_order(perm: dict) -> int:
    k = 1
    cur = dict(perm)
    ident = {x: x for x in perm}
    while cur != ident:
        cur = {x: perm[cur[x]] for x in cur}
        k += 1
    return k


def _commutes(p: dict, q: dict) -> bool:
    return all(p[q[x]] == q[p[x]] for x in p)


def _powers_action(group, generator: dict) -> dict:
    """Action of a cyclic group sending element "k" to generator^k."""
    return {el: _perm_power(generator, int(el)) for el in group.elements}


def _random_commuting_actions(rng: random.Random, graph: Graph, groups: dict):
    """Sample left/right action tables for every edge set, keeping the two
    sides commuting: the left action is a random cyclic-power action, the
    right generator is drawn from the centralizer of the left one."""
    left: dict = {}
    right: dict = {}
    pairs: dict = {}
    for e in graph.edges:
        pairs.setdefault((e.src, e.tgt), []).append(e.id)
    for (v, w), ids in pairs.items():
        lgrp, rgrp = groups[v], groups[w]
        perms = _all_perms(ids)
        lgen = rng.choice([p for p in perms if lgrp.order % _perm_order(p) == 0])
        rpool = [
            p
            for p in perms
            if rgrp.order % _perm_order(p) == 0 and _commutes(p, lgen)
        ]
        rgen = rng.choice(rpool) if rpool else {x: x for x in ids}
        left[(v, w)] = _powers_action(lgrp, lgen)
        right[(v, w)] = _powers_action(rgrp, rgen)
    return left, right


def random_bimodular_pair(
    rng: random.Random,
    max_vertices: int = 5,
    max_edges: int = 6,
    max_group_order: int = 4,
) -> tuple[BimodularGraph, BimodularGraph]:
    f, g = random_pair(rng, max_vertices, max_edges)
    groups: dict = {}
    for v in sorted(f.vertices | g.vertices):
        groups[v] = cyclic_group(rng.randint(1, max_group_order))
    f_left, f_right = _random_commuting_actions(rng, f, groups)
    g_left, g_right = _random_commuting_actions(rng, g, groups)
    bf = BimodularGraph(f, {v: groups[v] for v in f.vertices}, f_left, f_right)
    bg = BimodularGraph(g, {v: groups[v] for v in g.vertices}, g_left, g_right)
    return bf, bg


def campaign_bimod_well_defined(
    trials: int = 200,
    seed: int = 42,
    max_vertices: int = 5,
    max_edges: int = 6,
    max_group_order: int = 4,
) -> CampaignResult:
    def run_one(rng):
        bf, bg = random_bimodular_pair(rng, max_vertices, max_edges, max_group_order)
        report = check_well_defined(bf, bg)
        # executing also re-validates the descended boundary actions
        bimod_execute(bf, bg)

        def replay():
            return render_bimodular("F", bf) + "\n" + render_bimodular("G", bg)

        return report, replay

    return _campaign("bimod-well-defined", trials, seed, run_one)
