"""Edge-rewiring involutions and the orchestrator that turns a locally Schur
positive graph into a dual equivalence graph one color at a time.

All four maps replace a single color class and leave vertices, signatures,
and every other color untouched, so the quasisymmetric generating function is
preserved exactly.  Each application is validated structurally (the new color
class must again be a matching on the same vertex support) and the orchestrator
additionally verifies local Schur positivity after every committed step,
aborting with a diagnostic rather than certifying a dubious graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .axioms import check_axiom, is_locally_schur_positive
from .graph import (
    ComponentView,
    SignedColoredGraph,
    count_component_isomorphisms,
    i_package,
    package_colors,
    package_positions,
    seeded_isomorphism,
)
from .standard import identify_component
from .structure import (
    StructureError,
    defect_sets,
    has_type_w,
    is_flat_edge,
    negatively_dominant,
    nonflat_chain_through,
    psi_target,
    set_U,
)
from .symfunc import SchurExpansion, expand_in_schur


class TransformError(ValueError):
    """A rewiring map was invoked outside its domain."""


# ---------------------------------------------------------------------------
# package machinery


def package_isomorphism(
    G: SignedColoredGraph, a: str, b: str, i: int
) -> dict[str, str] | None:
    """Forced isomorphism between the i-packages of a and b seeded by a -> b,
    preserving package colors and the signature positions away from i."""
    mapping = seeded_isomorphism(
        G,
        G,
        {a: b},
        colors=package_colors(G, i),
        positions=package_positions(G, i),
    )
    if mapping is None:
        return None
    if set(mapping) != set(i_package(G, a, i).vertices):
        return None
    return mapping


def _rewire(
    G: SignedColoredGraph,
    i: int,
    phi: dict[str, str],
    through_edge: bool,
) -> SignedColoredGraph:
    """Replace the i-matching using a package bijection phi.

    ``through_edge`` False pairs v with phi(v) on the packages (the phi/psi
    pattern); True pairs v with the old i-neighbor of phi(v) (the gamma
    pattern).  Off-package edges follow so the result stays a matching.
    """
    old = G.matching(i)
    domain = set(phi)
    new: dict[str, str] = {}

    def pair(u: str, w: str, why: str):
        if u == w:
            raise TransformError(f"rewiring would match {u!r} with itself ({why})")
        if new.get(u, w) != w or new.get(w, u) != u:
            raise TransformError(f"rewiring conflict at {u!r}/{w!r} ({why})")
        new[u] = w
        new[w] = u

    for v in sorted(old):
        if v in domain:
            target = phi[v] if not through_edge else old.get(phi[v])
            if target is None:
                raise TransformError(f"no old {i}-edge at image of {v!r}")
            pair(v, target, "package")
        elif old[v] in domain:
            x = old[v]
            target = phi[x] if through_edge else old.get(phi[x])
            if target is None:
                raise TransformError(f"image of {x!r} lacks an old {i}-edge")
            pair(v, target, "beyond package")
        else:
            pair(v, old[v], "unchanged")
    if set(new) != set(old):
        raise TransformError("rewiring changed the matched vertex set")
    return G.with_color_matching(i, new)


# ---------------------------------------------------------------------------
# the four involutions


def phi_partner(G: SignedColoredGraph, w: str, i: int, r: int = 0) -> str:
    """u = E_{i-1}(E_i E_{i-1})^r (w)."""
    u = w
    for _ in range(r):
        nxt = G.neighbor(u, i - 1)
        if nxt is None:
            raise TransformError(f"non-flat chain from {w!r} ends before r={r}")
        u = G.neighbor(nxt, i)
        if u is None:
            raise TransformError(f"non-flat chain from {w!r} ends before r={r}")
    u = G.neighbor(u, i - 1)
    if u is None:
        raise TransformError(f"vertex {w!r} has no {i - 1}-neighbor")
    return u


def apply_phi(G: SignedColoredGraph, w: str, i: int, r: int = 0) -> SignedColoredGraph:
    """Rewire so the overlong non-flat chain through w closes into a double
    edge at w, swapping the i-edges of two isomorphic packages."""
    sets = defect_sets(G, i)
    if w not in sets.W0:
        if w in sets.W:
            raise TransformError(f"{w!r} is in W_{i} but fails the package filter")
        raise TransformError(f"{w!r} is not in W_{i}")
    u = phi_partner(G, w, i, r)
    if r > 0:
        chain = nonflat_chain_through(G, w, i)
        between = set()
        if w in chain and u in chain:
            a, b = sorted((chain.index(w), chain.index(u)))
            between = set(chain[a : b + 1])
        if not between or not between <= (sets.W0 | {w, u}):
            raise TransformError(f"long variant r={r} leaves the eligible chain")
    phi = package_isomorphism(G, w, u, i)
    if phi is None:
        raise TransformError(f"packages of {w!r} and {u!r} are not isomorphic")
    back = {v: k for k, v in phi.items()}
    if set(back) & set(phi):
        full = dict(phi)
    else:
        full = {**phi, **back}
    return _rewire(G, i, full, through_edge=False)


def apply_psi(G: SignedColoredGraph, x: str, i: int, r: int = 0) -> SignedColoredGraph:
    """Rewire so the overlong flat chain through x shortens, swapping i-edges
    across the i-2-edges at x and at the first clear vertex past E_i(x)."""
    sets = defect_sets(G, i)
    if x not in sets.C0:
        if x in sets.C:
            raise TransformError(f"{x!r} is in C_{i} but fails the package filter")
        raise TransformError(f"{x!r} is not in C_{i}")
    base = x
    for _ in range(r):
        step = base
        for color in (i, i - 2, i, i - 2):
            step = G.neighbor(step, color)
            if step is None:
                raise TransformError(f"long variant r={r} runs off the chain")
        base = step
        if base not in sets.C0:
            raise TransformError(f"long variant r={r} leaves C0 at {base!r}")
    path = psi_target(G, base, i)
    if path is None:
        raise TransformError(f"no eligible partner past {base!r}")
    u = path[-1]
    a = G.neighbor(x, i - 2)
    b = G.neighbor(u, i - 2)
    if a is None or b is None:
        raise TransformError("chain endpoints lack their lower edges")
    phi = package_isomorphism(G, a, b, i)
    if phi is None:
        raise TransformError(f"packages of {a!r} and {b!r} are not isomorphic")
    back = {v: k for k, v in phi.items()}
    full = dict(phi) if set(back) & set(phi) else {**phi, **back}
    return _rewire(G, i, full, through_edge=False)


def gamma_partner(G: SignedColoredGraph, z: str, i: int) -> str:
    """First u = (E_{i-1} E_i)^m (z), m >= 1, sharing z's qualifications."""
    y = z
    visited = {z}
    while True:
        step = G.neighbor(y, i)
        if step is None:
            raise TransformError(f"walk from {z!r} leaves the graph")
        y = G.neighbor(step, i - 1)
        if y is None or y in visited:
            raise TransformError(f"no eligible partner on the walk from {z!r}")
        visited.add(y)
        if (
            G.neighbor(y, i) is not None
            and not has_type_w(G, y, i - 1)
            and G.neighbor(y, i - 2) is not None
            and is_flat_edge(G, y, i - 2)
        ):
            return y


def apply_gamma(G: SignedColoredGraph, z: str, i: int) -> SignedColoredGraph:
    """Exchange the subtrees hanging below z and its partner along the
    non-flat walk, unblocking the other two maps."""
    if G.neighbor(z, i) is None or is_flat_edge(G, z, i):
        raise TransformError(f"{z!r} lacks a non-flat {i}-edge")
    if has_type_w(G, z, i - 1):
        raise TransformError(f"{z!r} has type W one color down")
    if G.neighbor(z, i - 2) is None or not is_flat_edge(G, z, i - 2):
        raise TransformError(f"{z!r} lacks a flat {i - 2}-edge")
    u = gamma_partner(G, z, i)
    a = G.neighbor(z, i - 2)
    b = G.neighbor(u, i - 2)
    phi = package_isomorphism(G, a, b, i)
    if phi is None:
        raise TransformError(f"packages of {a!r} and {b!r} are not isomorphic")
    back = {v: k for k, v in phi.items()}
    full = dict(phi) if set(back) & set(phi) else {**phi, **back}
    return _rewire(G, i, full, through_edge=True)


def theta_pivot(G: SignedColoredGraph, i: int, H_vertices) -> ComponentView:
    pivot = negatively_dominant(G, H_vertices, i)
    if pivot is None:
        raise TransformError("no negatively dominant restricted component")
    return pivot


def apply_theta(
    G: SignedColoredGraph, pivot: ComponentView, i: int
) -> SignedColoredGraph:
    """Split an axiom-6 violating component: i-edges between the components
    adjacent to the pivot and their isomorphic copies are swapped so the
    pivot's neighborhood closes up."""
    H = set(G.component_of(pivot.min_vertex(), range(2, i + 1)).vertices)
    lower = tuple(range(2, i))
    comps = [c for c in G.components(lower) if set(c.vertices) <= H]
    comp_of: dict[str, int] = {}
    for k, c in enumerate(comps):
        for v in c.vertices:
            comp_of[v] = k
    pivot_idx = comp_of[pivot.min_vertex()]

    old = G.matching(i)
    adjacent: set[int] = set()
    for u, w in old.items():
        if u in comp_of and comp_of[u] == pivot_idx and w in comp_of:
            if comp_of[w] != pivot_idx:
                adjacent.add(comp_of[w])
    if not adjacent:
        raise TransformError("pivot component has no outgoing i-edges")
    ring = set().union(*(set(comps[k].vertices) for k in adjacent))

    # components needing an isomorphism into the ring
    need: set[int] = set()
    for u, w in old.items():
        if u in ring and w in comp_of and comp_of[w] not in adjacent | {pivot_idx}:
            need.add(comp_of[w])
    maps: dict[int, dict[str, str]] = {k: {v: v for v in comps[k].vertices} for k in adjacent}
    positions = range(1, G.N)
    for k in sorted(need):
        source = comps[k]
        found: list[tuple[int, dict[str, str]]] = []
        for t in sorted(adjacent):
            target = comps[t]
            if sorted(G.sigma[v] for v in source.vertices) != sorted(
                G.sigma[v] for v in target.vertices
            ):
                continue
            isos = count_component_isomorphisms(
                G, source.vertices, G, target.vertices, lower, positions, limit=2
            )
            for m in isos:
                found.append((t, m))
        if not found:
            raise TransformError(
                f"component at {source.min_vertex()!r} matches nothing adjacent to the pivot"
            )
        targets = {t for t, _ in found}
        if len(targets) > 1:
            raise TransformError(
                f"component at {source.min_vertex()!r} matches several adjacent components"
            )
        if len(found) > 1:
            raise TransformError(
                f"component at {source.min_vertex()!r} has a non-unique isomorphism"
            )
        maps[k] = found[0][1]

    def mapped(v: str) -> str | None:
        k = comp_of.get(v)
        if k is None or k not in maps:
            return None
        return maps[k].get(v)

    new: dict[str, str] = {}

    def pair(u: str, w: str):
        if u == w or new.get(u, w) != w or new.get(w, u) != u:
            raise TransformError(f"theta rewiring conflict at {u!r}/{w!r}")
        new[u] = w
        new[w] = u

    for v in sorted(old):
        if v in new:
            continue
        w = old[v]
        v_in_ring = v in ring
        w_in_ring = w in ring
        v_in_pivot = comp_of.get(v) == pivot_idx
        w_in_pivot = comp_of.get(w) == pivot_idx
        if v_in_ring and not w_in_ring and not w_in_pivot and mapped(w) is not None:
            pair(v, mapped(w))
        elif w_in_ring and not v_in_ring and not v_in_pivot and mapped(v) is not None:
            img = maps[comp_of[v]][v]
            target = old.get(img)
            if target is None:
                raise TransformError(f"image {img!r} lacks an old {i}-edge")
            pair(v, target)
        else:
            pair(v, w)
    if set(new) != set(old):
        raise TransformError("theta changed the matched vertex set")
    return G.with_color_matching(i, new)


# ---------------------------------------------------------------------------
# logging


@dataclass(frozen=True)
class TransformStep:
    kind: str  # 'phi' | 'psi' | 'gamma' | 'theta'
    color: int
    anchor: str
    variant: int = 0

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "color": self.color,
            "anchor": self.anchor,
            "variant": self.variant,
        }

    @staticmethod
    def from_dict(d: dict) -> "TransformStep":
        return TransformStep(d["kind"], d["color"], d["anchor"], d.get("variant", 0))


@dataclass
class TransformLog:
    steps: list[TransformStep] = field(default_factory=list)
    checkpoints: list[str] = field(default_factory=list)
    policy: str = "default"
    aborted: bool = False
    diagnostic: str | None = None
    failure_graph: SignedColoredGraph | None = None

    def record(self, step: TransformStep, note: str):
        self.steps.append(step)
        self.checkpoints.append(note)

    def to_text(self) -> str:
        doc = {
            "policy": self.policy,
            "steps": [s.to_dict() for s in self.steps],
            "checkpoints": self.checkpoints,
            "aborted": self.aborted,
            "diagnostic": self.diagnostic,
        }
        return json.dumps(doc, indent=2) + "\n"

    @staticmethod
    def from_text(text: str) -> "TransformLog":
        doc = json.loads(text)
        log = TransformLog(
            steps=[TransformStep.from_dict(d) for d in doc["steps"]],
            checkpoints=list(doc.get("checkpoints", [])),
            policy=doc.get("policy", "default"),
            aborted=doc.get("aborted", False),
            diagnostic=doc.get("diagnostic"),
        )
        return log


def apply_step(G: SignedColoredGraph, step: TransformStep) -> SignedColoredGraph:
    if step.kind == "phi":
        return apply_phi(G, step.anchor, step.color, step.variant)
    if step.kind == "psi":
        return apply_psi(G, step.anchor, step.color, step.variant)
    if step.kind == "gamma":
        return apply_gamma(G, step.anchor, step.color)
    if step.kind == "theta":
        pivot = G.component_of(step.anchor, range(2, step.color))
        return apply_theta(G, pivot, step.color)
    raise ValueError(f"unknown step kind {step.kind!r}")


def replay(G: SignedColoredGraph, log: TransformLog) -> SignedColoredGraph:
    for step in log.steps:
        G = apply_step(G, step)
    return G


# ---------------------------------------------------------------------------
# orchestration


@dataclass(frozen=True)
class Policy:
    """Selection rules: colors ascending, phi before psi, least anchor id,
    longest strictly-shrinking variant preferred."""

    prefer_long: bool = True
    name: str = "default"


def _long_r(G: SignedColoredGraph, w: str, i: int, W0) -> int:
    """Largest r for the long rewiring anchored at w: the chain grown ahead
    of w's own edge must stay inside the eligible set."""
    u0 = G.neighbor(w, i)
    if u0 is None:
        return 0
    chain = [u0, w]
    used = {u0, w}
    while True:
        nxt = G.neighbor(chain[-1], i - 1)
        if nxt is None or nxt in used:
            break
        pair = G.neighbor(nxt, i)
        if pair is None or pair in used:
            break
        chain.extend([nxt, pair])
        used.update((nxt, pair))
    if len(chain) < 6 or not set(chain[1:-1]) <= W0:
        return 0
    return (len(chain) - 4) // 2


def _candidate_steps(G: SignedColoredGraph, i: int, policy: Policy):
    eligible = set_U(G, i)
    sets = defect_sets(G, i)
    ordered = sorted(eligible, key=lambda vk: (vk[1] != "phi", vk[0]))
    for anchor, kind in ordered:
        if kind == "phi" and policy.prefer_long:
            r = _long_r(G, anchor, i, sets.W0)
            if r > 0:
                step = TransformStep("phi", i, anchor, r)
                try:
                    H = apply_step(G, step)
                except TransformError:
                    H = None
                if H is not None and defect_sets(H, i).W < sets.W:
                    yield step
        yield TransformStep(kind, i, anchor, 0)


def _try_step(G: SignedColoredGraph, step: TransformStep):
    try:
        H = apply_step(G, step)
    except TransformError:
        return None
    if not is_locally_schur_positive(H).holds:
        return None
    return H


class PipelineAbort(Exception):
    def __init__(self, message: str, graph: SignedColoredGraph, component=None):
        super().__init__(message)
        self.graph = graph
        self.component = component


def _resolve_defects(G, i, policy, log, budget) -> SignedColoredGraph:
    """Drain W_i and C_i, interposing gamma when nothing is eligible."""
    seen_hashes: set[str] = set()
    while not defect_sets(G, i).all_empty():
        if budget[0] <= 0:
            raise PipelineAbort(f"step budget exhausted at color {i}", G)
        committed = False
        for step in _candidate_steps(G, i, policy):
            H = _try_step(G, step)
            if H is not None:
                log.record(
                    step,
                    f"defect step at color {i}; |W|={len(defect_sets(H, i).W)} "
                    f"|C|={len(defect_sets(H, i).C)}; locally Schur positive",
                )
                G = H
                budget[0] -= 1
                committed = True
                break
        if committed:
            continue
        # nothing eligible: try gamma to grow the eligible set
        gamma_done = False
        for z in G.vertices():
            if G.neighbor(z, i) is None or G.neighbor(z, i - 2) is None:
                continue
            if is_flat_edge(G, z, i) or has_type_w(G, z, i - 1):
                continue
            if not is_flat_edge(G, z, i - 2):
                continue
            step = TransformStep("gamma", i, z)
            try:
                H = apply_gamma(G, z, i)
            except TransformError:
                continue
            if not is_locally_schur_positive(H).holds:
                continue
            key = H.to_text()
            if key in seen_hashes:
                continue
            seen_hashes.add(key)
            log.record(step, f"gamma unblocking at color {i}; locally Schur positive")
            G = H
            budget[0] -= 1
            gamma_done = True
            break
        if not gamma_done:
            bad = min(defect_sets(G, i).W | defect_sets(G, i).C)
            comp = G.component_of(bad, (i - 2, i - 1, i) if i >= 4 else (i - 1, i))
            raise PipelineAbort(
                f"color {i}: defects remain but no eligible rewiring preserves "
                "local Schur positivity",
                G,
                comp,
            )
    return G


def _resolve_axiom6(G, i, policy, log, budget) -> SignedColoredGraph:
    """Split covers at color i until the restriction satisfies axiom 6,
    repairing any defects the splits create one and two colors up."""
    while True:
        report = check_axiom(G.restrict(i + 1), 6)
        if report.holds:
            return G
        if budget[0] <= 0:
            raise PipelineAbort(f"step budget exhausted during splits at color {i}", G)
        at_i = [w for w in report.witnesses if w[0] == i]
        if not at_i:
            raise PipelineAbort(
                f"axiom 6 fails below color {i}: {report.witnesses[:2]}", G
            )
        witness = at_i[0]
        H_comp = G.component_of(witness[1], range(2, i + 1))
        before_w = defect_sets(G, i + 1).W if i + 1 < G.n else frozenset()
        before_c = defect_sets(G, i + 2).C if i + 2 < G.n else frozenset()
        try:
            pivot = theta_pivot(G, i, H_comp.vertices)
            H = apply_theta(G, pivot, i)
        except (TransformError, StructureError) as e:
            raise PipelineAbort(f"color {i}: split failed: {e}", G, H_comp) from None
        step = TransformStep("theta", i, pivot.min_vertex())
        log.record(step, f"cover split at color {i}")
        G = H
        budget[0] -= 1
        # repair freshly created defects one and two colors up
        for color, kind, before in (
            (i + 1, "phi", before_w),
            (i + 2, "psi", before_c),
        ):
            if color >= G.n:
                continue
            while True:
                sets = defect_sets(G, color)
                fresh = sorted((sets.W if kind == "phi" else sets.C) - before)
                if not fresh:
                    break
                if budget[0] <= 0:
                    raise PipelineAbort(
                        f"step budget exhausted repairing color {color}", G
                    )
                repaired = False
                for anchor in fresh:
                    step = TransformStep(kind, color, anchor)
                    H = _try_step(G, step)
                    if H is not None:
                        log.record(step, f"post-split repair at color {color}")
                        G = H
                        budget[0] -= 1
                        repaired = True
                        break
                if not repaired:
                    raise PipelineAbort(
                        f"color {color}: split left unrepairable defects", G
                    )
        if not is_locally_schur_positive(G).holds:
            raise PipelineAbort(f"color {i}: split broke local Schur positivity", G)


def one_step(
    G: SignedColoredGraph, i: int, policy: Policy | None = None
) -> tuple[SignedColoredGraph, TransformLog]:
    """Make the restriction to colors up to i a dual equivalence graph,
    assuming the restriction one color lower already is one."""
    policy = policy or Policy()
    log = TransformLog(policy=policy.name)
    budget = [4 * len(G.sigma) * max(G.n, 2)]
    try:
        G = _resolve_defects(G, i, policy, log, budget)
        G = _resolve_axiom6(G, i, policy, log, budget)
    except PipelineAbort as e:
        log.aborted = True
        log.diagnostic = str(e)
        log.failure_graph = e.component.subgraph() if e.component else e.graph
        return e.graph, log
    return G, log


@dataclass
class PipelineResult:
    graph: SignedColoredGraph
    log: TransformLog
    expansion: SchurExpansion | None
    certified: bool
    components: list[tuple[tuple, str]] | None = None


def full_pipeline(
    G: SignedColoredGraph, policy: Policy | None = None, stop_at: int | None = None
) -> PipelineResult:
    """Run the per-color step for every color in ascending order and certify
    the result by the axiom checkers plus component identification."""
    policy = policy or Policy()
    log = TransformLog(policy=policy.name)
    for k in (1, 2, 3, 5):
        rep = check_axiom(G, k)
        if not rep.holds:
            log.aborted = True
            log.diagnostic = f"input fails axiom {k}: {rep.witnesses[:3]}"
            log.failure_graph = G
            return PipelineResult(G, log, None, False)
    last = stop_at if stop_at is not None else G.n - 1
    for i in range(2, last + 1):
        G, step_log = one_step(G, i, policy)
        log.steps.extend(step_log.steps)
        log.checkpoints.extend(step_log.checkpoints)
        if step_log.aborted:
            log.aborted = True
            log.diagnostic = step_log.diagnostic
            log.failure_graph = step_log.failure_graph
            return PipelineResult(G, log, None, False)
    if stop_at is not None and stop_at < G.n - 1:
        return PipelineResult(G, log, None, False)
    certified = all(check_axiom(G, k).holds for k in range(1, 7))
    expansion = expand_in_schur(G.generating_function())
    components = None
    if G.n == G.N:
        components = []
        for comp in G.components(G.colors()):
            ident = identify_component(comp)
            components.append(
                (ident[0] if ident else None, comp.min_vertex())
            )
        certified = certified and all(lam is not None for lam, _ in components)
    if not certified:
        log.diagnostic = log.diagnostic or "result failed final certification"
    return PipelineResult(G, log, expansion, certified, components)
