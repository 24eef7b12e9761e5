# -*- coding: utf-8 -*-
"""
bruhat_system - 量子ブリュア・グラフモジュール
上向き辺（重み 0）と下向き辺（重み α∨）からなる有向グラフを networkx で持ち、
最短距離・最短道の重みと、二重ブリュア・グラフの重み多重集合との比較を行う
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from core.dbg import label_floor, wts_multiset
from core.errors import ConsistencyError, DomainRejection
from core.rootsys import RootSystem, Vector, WeylElement


@dataclass(frozen=True)
class QBGEdge:
    source: WeylElement
    rid: int
    target: WeylElement
    kind: str
    weight: Vector

    def to_dict(self) -> Dict[str, Any]:
        return {
            "from": self.source.format(),
            "to": self.target.format(),
            "root": list(self.source.system.roots[self.rid]),
            "kind": self.kind,
            "weight": list(self.weight),
        }


class QuantumBruhatGraph:
    """W 上の量子ブリュア・グラフ（構築後は不変）"""

    def __init__(self, system: RootSystem):
        self.system = system
        self.graph = nx.DiGraph()
        self.edges: List[QBGEdge] = []
        zero = (0,) * system.rank
        for w in system.elements():
            self.graph.add_node(w)
            for rid in system.positive_ids:
                target = w * system.reflection(rid)
                jump = target.length - w.length
                if jump == 1:
                    edge = QBGEdge(w, rid, target, "up", zero)
                elif jump == 1 - system.pair(system.coroots[rid], system.two_rho):
                    edge = QBGEdge(w, rid, target, "down", system.coroots[rid])
                else:
                    continue
                self.edges.append(edge)
                self.graph.add_edge(w, target, rid=rid, kind=edge.kind, weight=edge.weight)
        self._from_source: Dict[WeylElement, Tuple[Dict[WeylElement, int], Dict[WeylElement, Vector]]] = {}

    def is_strongly_connected(self) -> bool:
        return nx.is_strongly_connected(self.graph)

    def _solve(self, u: WeylElement) -> Tuple[Dict[WeylElement, int], Dict[WeylElement, Vector]]:
        """u からの BFS 距離と、最短道 DAG 上で伝播させた重み（一意性を検査）"""
        cached = self._from_source.get(u)
        if cached is not None:
            return cached
        dist = nx.single_source_shortest_path_length(self.graph, u)
        weights: Dict[WeylElement, set] = {u: {(0,) * self.system.rank}}
        for node in sorted(dist, key=lambda x: (dist[x], x.sort_key)):
            for succ, attrs in self.graph[node].items():
                if dist.get(succ) == dist[node] + 1:
                    bucket = weights.setdefault(succ, set())
                    for wt in weights[node]:
                        bucket.add(tuple(a + b for a, b in zip(wt, attrs["weight"])))
        unique: Dict[WeylElement, Vector] = {}
        for node, bucket in weights.items():
            if len(bucket) != 1:
                raise ConsistencyError(
                    "shortest paths disagree in weight",
                    {"from": u.format(), "to": node.format(), "weights": sorted(bucket)},
                )
            unique[node] = next(iter(bucket))
        self._from_source[u] = (dist, unique)
        return dist, unique

    def distance_weight(self, u: WeylElement, v: WeylElement) -> Tuple[int, Vector]:
        dist, weights = self._solve(u)
        if v not in dist:
            raise ConsistencyError("quantum Bruhat graph is not strongly connected",
                                   {"from": u.format(), "to": v.format()})
        return dist[v], weights[v]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "cartan_label": self.system.cartan_label,
            "vertices": [w.format() for w in self.system.elements()],
            "edges": [e.to_dict() for e in self.edges],
        }


@lru_cache(maxsize=None)
def build_qbg(system: RootSystem) -> QuantumBruhatGraph:
    return QuantumBruhatGraph(system)


def qbg_distance_weight(u: WeylElement, v: WeylElement) -> Tuple[int, Vector]:
    return build_qbg(u.system).distance_weight(u, v)


@dataclass
class ComparisonReport:
    """wts(u⇒v) と (wt(u⇒v), d(u⇒v)) の比較結果"""

    u: WeylElement
    v: WeylElement
    distance: int
    weight: Vector
    checked: int = 0
    violations: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            "u": self.u.format(),
            "v": self.v.format(),
            "d": self.distance,
            "wt": list(self.weight),
            "checked": self.checked,
            "ok": self.ok,
            "violations": self.violations,
        }


def qbg_dbg_compare(u: WeylElement, v: WeylElement, window: FrozenSet[Vector]) -> ComparisonReport:
    """
    窓内の各 (ω, e) ∈ wts(u⇒v) について
    (a) ω − wt ≥ 0、(b) e ≤ <ω,2ρ> + ℓ(v) − ℓ(u) と等号時の一致、
    (c) (wt, d) の重複度が 1 であることを確かめる
    """
    system = u.system
    d, wt = qbg_distance_weight(u, v)
    window = frozenset(tuple(w) for w in window)
    if wt not in window:
        raise DomainRejection("window_misses_weight",
                              f"window must contain wt(u=>v) = {','.join(map(str, wt))}", weight=list(wt))
    ms = wts_multiset(u, v, v, window)
    report = ComparisonReport(u, v, d, wt)
    for (omega, e), mult in sorted(ms.coarse().items()):
        report.checked += 1
        if any(a < b for a, b in zip(omega, wt)):
            report.violations.append({"check": "a", "weight": list(omega), "length": e})
        bound = system.pair(omega, system.two_rho) + v.length - u.length
        if e > bound:
            report.violations.append({"check": "b", "weight": list(omega), "length": e, "bound": bound})
        elif e == bound and (omega, e) != (wt, d):
            report.violations.append({"check": "b_equality", "weight": list(omega), "length": e})
    top = ms.coarse().get((wt, d), 0)
    if top != 1:
        report.violations.append({"check": "c", "weight": list(wt), "length": d, "mult": top})
    return report


def edge_respects_label_bound(edge: QBGEdge) -> bool:
    """QBG 辺を重み係数 0/1 のラベル付き辺とみなしたとき m ≥ Φ⁺(−wα) を満たすか"""
    label = 0 if edge.kind == "up" else 1
    return label >= label_floor(edge.source, edge.rid)
