"""
Exhaustive search for e_q(k, n, c), the largest c-intersecting equidistant
code in G_q(k, n), as a maximum clique of the intersection graph whose
vertices are the subspaces and whose edges join pairs meeting in dimension c.

The solver is a branch and bound with greedy colouring bounds over Python
int bitsets. Vertices are labelled by the rank of Subspace.sort_key, so the
reported witness (the lexicographically smallest maximum clique) does not
depend on enumeration order.
"""
import logging
from dataclasses import dataclass, field

import networkx as nx

from subspace_codes.analysis import (
    SubspaceCode, bounds_ledger, check_classification_predicates, klein_set_gap, orthogonal_code,
    profile, validate_parameters,
)
from subspace_codes.conf import get_setting
from subspace_codes.fields import field_for
from subspace_codes.grassmann import enumerate_grassmannian, intersection_dim

logger = logging.getLogger(__name__)

EXHAUSTIVE = 'exhaustive'
EXPLORED_REGION = 'explored region'


class NodeBudgetExhausted(Exception):
    pass


@dataclass
class IntersectionGraph:
    q: int
    k: int
    n: int
    c: int
    vertices: list
    graph: nx.Graph

    @property
    def edge_count(self):
        return self.graph.number_of_edges()

    def code(self, labels):
        return SubspaceCode(self.vertices[v] for v in labels)


def build_graph(q, k, n, c, budget=None):
    """
    The intersection graph on G_q(k, n). Point-set bitmasks are used when
    q^n is at most POINTSET_LIMIT: dim(U & V) = c iff |U & V| = q^c.
    """
    validate_parameters(q, k, n, c)
    ctx = field_for(q)
    vertices = sorted(enumerate_grassmannian(ctx, k, n, budget), key=lambda s: s.sort_key)
    graph = nx.Graph()
    graph.add_nodes_from(range(len(vertices)))
    if ctx.q ** n <= get_setting('POINTSET_LIMIT'):
        masks = [v.point_mask() for v in vertices]
        target = ctx.q ** c
        for i, mi in enumerate(masks):
            for j in range(i + 1, len(masks)):
                if (mi & masks[j]).bit_count() == target:
                    graph.add_edge(i, j)
    else:
        logger.debug('q^n = %s exceeds the point-set limit; using ranks', ctx.q ** n)
        for i, u in enumerate(vertices):
            for j in range(i + 1, len(vertices)):
                if intersection_dim(u, vertices[j]) == c:
                    graph.add_edge(i, j)
    logger.debug('Intersection graph for (%s,%s,%s,%s): %s vertices, %s edges',
                 q, k, n, c, len(vertices), graph.number_of_edges())
    return IntersectionGraph(q, k, n, c, vertices, graph)


class CliqueSolver:
    """
    Maximum clique by branch and bound with greedy colouring (MCQ style).

    Bit positions follow a degeneracy order: vertices of higher core number
    come first, ties broken by label.
    """

    def __init__(self, graph, node_budget=None):
        self.graph = graph
        self.node_budget = node_budget if node_budget is not None else get_setting('CLIQUE_NODE_BUDGET')
        core = nx.core_number(graph) if graph.number_of_nodes() else {}
        self.order = sorted(graph.nodes, key=lambda v: (-core[v], v))
        self.position = {v: i for i, v in enumerate(self.order)}
        self.adj = [0] * len(self.order)
        for v in self.order:
            bits = 0
            for u in graph.neighbors(v):
                bits |= 1 << self.position[u]
            self.adj[self.position[v]] = bits
        self.nodes_used = 0
        self.best = []

    def _tick(self):
        self.nodes_used += 1
        if self.nodes_used > self.node_budget:
            raise NodeBudgetExhausted()

    def _color(self, candidates):
        order, colors = [], []
        uncolored = candidates
        color = 0
        while uncolored:
            color += 1
            available = uncolored
            while available:
                low = available & -available
                v = low.bit_length() - 1
                uncolored &= ~low
                available &= ~low
                available &= ~self.adj[v]
                order.append(v)
                colors.append(color)
        return order, colors

    def _expand(self, clique, candidates):
        self._tick()
        order, colors = self._color(candidates)
        for v, color in zip(reversed(order), reversed(colors)):
            if len(clique) + color <= len(self.best):
                return
            grown = clique + [v]
            remaining = candidates & self.adj[v]
            if remaining:
                self._expand(grown, remaining)
            elif len(grown) > len(self.best):
                self.best = grown
            candidates &= ~(1 << v)

    def _find(self, clique, candidates, need):
        """A clique of exactly `need` vertices extending clique inside candidates, or None."""
        self._tick()
        if len(clique) == need:
            return clique
        order, colors = self._color(candidates)
        for v, color in zip(reversed(order), reversed(colors)):
            if len(clique) + color < need:
                return None
            found = self._find(clique + [v], candidates & self.adj[v], need)
            if found:
                return found
            candidates &= ~(1 << v)
        return None

    def _labels(self, positions):
        return sorted(self.order[p] for p in positions)

    def maximum(self):
        """(size, clique labels, exact). A budget hit returns the best clique so far."""
        everything = (1 << len(self.order)) - 1
        try:
            if everything:
                self._expand([], everything)
        except NodeBudgetExhausted:
            logger.warning('Clique search stopped after %s nodes; reporting a lower bound', self.node_budget)
            return len(self.best), self._labels(self.best), False
        return len(self.best), self._labels(self.best), True

    def smallest_clique_of_size(self, size):
        """Lexicographically smallest clique (by sorted labels) with the given size."""
        chosen = []
        candidates = (1 << len(self.order)) - 1
        for label in sorted(self.graph.nodes):
            if len(chosen) == size:
                break
            bit = 1 << self.position[label]
            if not candidates & bit:
                continue
            later = 0
            for other in self.graph.neighbors(label):
                if other > label:
                    later |= 1 << self.position[other]
            rest = candidates & self.adj[self.position[label]] & later
            if self._find([], rest, size - len(chosen) - 1) is not None:
                chosen.append(label)
                candidates = rest
        return chosen


def baseline_clique_number(graph):
    """Independent check of the solver: the largest maximal clique from networkx."""
    return max((len(c) for c in nx.find_cliques(graph)), default=0)


@dataclass
class CertificateCheck:
    name: str
    applicable: int = 0
    passed: bool = True
    detail: str = ''


@dataclass
class SearchCertificate:
    parameters: tuple
    e_value: int
    exact: bool
    witness: SubspaceCode = None
    checks: list = field(default_factory=list)
    node_budget: int = 0
    nodes_used: int = 0
    vertex_count: int = 0
    edge_count: int = 0
    scope: str = EXHAUSTIVE

    @property
    def all_passed(self):
        return all(check.passed for check in self.checks)


def solve(q, k, n, c, node_budget=None, grassmannian_budget=None):
    """(SearchCertificate without checks, IntersectionGraph) for the parameters."""
    graph = build_graph(q, k, n, c, grassmannian_budget)
    solver = CliqueSolver(graph.graph, node_budget)
    size, clique, exact = solver.maximum()
    if exact and size:
        try:
            clique = solver.smallest_clique_of_size(size)
        except NodeBudgetExhausted:
            logger.warning('Budget exhausted while choosing the smallest witness; keeping the first one found')
    witness = graph.code(clique) if size >= 2 else None
    if witness is not None:
        prof = profile(witness)
        if not prof.is_equidistant or prof.c != c or len(witness) != size:
            raise AssertionError(f'witness for {(q, k, n, c)} is not a {c}-intersecting equidistant code')
    return SearchCertificate(
        parameters=(q, k, n, c),
        e_value=size,
        exact=exact,
        witness=witness,
        node_budget=solver.node_budget,
        nodes_used=solver.nodes_used,
        vertex_count=len(graph.vertices),
        edge_count=graph.edge_count,
        scope=EXHAUSTIVE if exact else EXPLORED_REGION,
    ), graph


def max_equidistant(q, k, n, c, node_budget=None, grassmannian_budget=None):
    """e_q(k,n,c) with a witness; exact unless the node budget runs out."""
    certificate, _ = solve(q, k, n, c, node_budget, grassmannian_budget)
    return certificate


def _tally(checks, name, applicable, passed, detail=''):
    entry = checks.setdefault(name, CertificateCheck(name))
    if applicable:
        entry.applicable += 1
        if not passed:
            entry.passed = False
            entry.detail = detail or entry.detail


def certify_classification(q, k, n, c, node_budget=None, grassmannian_budget=None,
                           clique_limit=100_000, duality=False):
    """
    Search e_q(k,n,c), then check the classification statements on every
    maximal clique of the intersection graph (every equidistant code is a
    subset of one, and the checked properties pass to subsets).
    """
    certificate, graph = solve(q, k, n, c, node_budget, grassmannian_budget)
    checks = {}
    ledger = bounds_ledger(q, k, n, c)
    dichotomy_row = c in (0, k - 1, 2 * k - n)
    explored_all = certificate.exact
    examined = 0
    if certificate.exact:
        for clique in nx.find_cliques(graph.graph):
            if examined >= clique_limit:
                explored_all = False
                logger.warning('Stopped after %s maximal cliques', clique_limit)
                break
            if len(clique) < 2:
                continue
            examined += 1
            code = graph.code(clique)
            optimal = len(code) == certificate.e_value
            report = check_classification_predicates(code, optimal=optimal)
            for check in report.checks:
                _tally(checks, check.name, check.applicable, check.passed, check.detail)
            sunflower, dual_sunflower = report.is_sunflower, report.orthogonal_is_sunflower
            _tally(checks, 'dichotomy', optimal and dichotomy_row, sunflower or dual_sunflower,
                   f'optimal code of size {len(code)} is neither a sunflower nor an orthogonal sunflower')
            _tally(checks, 'mutual_exclusion', optimal and sunflower and dual_sunflower,
                   c == 0 and n == 2 * k, 'both a sunflower and an orthogonal sunflower with c > 0 or n != 2k')
            _tally(checks, 'non_sunflower_cap', c == k - 1 and not sunflower, len(code) <= ledger.extremal_cap,
                   f'non-sunflower of size {len(code)} exceeds {ledger.extremal_cap}')
    if duality and certificate.exact:
        dual_certificate = max_equidistant(q, n - k, n, n - 2 * k + c, node_budget, grassmannian_budget)
        _tally(checks, 'duality', dual_certificate.exact, dual_certificate.e_value == certificate.e_value,
               f'e for the dual parameters is {dual_certificate.e_value}')
    if (k, n, c) == (3, 6, 1):
        gap = klein_set_gap(q)
        _tally(checks, 'klein_set_gap', True, gap['holds'])
    if certificate.witness is not None:
        witness_dual = profile(orthogonal_code(certificate.witness))
        _tally(checks, 'witness_dual_intersection', True, witness_dual.c == n - 2 * k + c,
               f'orthogonal witness is {witness_dual.c}-intersecting')
    certificate.checks = list(checks.values())
    certificate.scope = EXHAUSTIVE if explored_all else EXPLORED_REGION
    logger.debug('Certified %s over %s maximal cliques (%s)', certificate.parameters, examined, certificate.scope)
    return certificate
