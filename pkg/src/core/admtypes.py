# -*- coding: utf-8 -*-
"""
bruhat_system - 許容型モジュール
(x, u, ≺) の許容型、型と増加道の全単射、型多様体の次元、
半無限軌道との交叉の片（piece）の国勢調査
"""

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.affine import AffineElement, AffineRoot, affine_identity, affine_reflection, ell_u
from core.dbg import LabelledPath, enumerate_increasing_paths, wts_multiset
from core.errors import ConsistencyError, DomainRejection
from core.reforder import ReflectionOrder, order_with_suffix, pi_gt
from core.rootsys import RootSystem, WeylElement

Entry = Tuple[int, int]


@dataclass(frozen=True)
class AdmissibleType:
    """{(n_h, ν_h)}（n_h は 1 始まりで狭義増加）と、積 x = r_{b_1} … r_{b_N}"""

    order: ReflectionOrder
    u: WeylElement
    entries: Tuple[Entry, ...]
    x: AffineElement

    @property
    def cardinality(self) -> int:
        return len(self.entries)

    def affine_roots(self) -> List[AffineRoot]:
        return _affine_roots(self.entries, self.u, self.order)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "entries": [[n, nu] for n, nu in self.entries],
            "affine_roots": [b.to_dict() for b in self.affine_roots()],
            "x": self.x.format(),
            "u": self.u.format(),
        }


def _affine_roots(entries: Sequence[Entry], u: WeylElement, order: ReflectionOrder) -> List[AffineRoot]:
    # b_h = (u β_{n_h}, ν_h)
    return [AffineRoot(order.system, u.perm[order.beta(n)], nu) for n, nu in entries]


def _normalize_entries(entries: Sequence[Sequence[int]], order: ReflectionOrder) -> Tuple[Entry, ...]:
    normalized = tuple((int(n), int(nu)) for n, nu in entries)
    indices = [n for n, _ in normalized]
    if any(not 1 <= n <= len(order) for n in indices):
        raise DomainRejection("index_out_of_range", f"type indices must lie in 1..{len(order)}", indices=indices)
    if any(a >= b for a, b in zip(indices, indices[1:])):
        raise DomainRejection("not_increasing", "type indices must be strictly increasing", indices=indices)
    return normalized


def _first_violation(bs: Sequence[AffineRoot], reflections: Sequence[AffineElement]) -> Optional[int]:
    """r_{b_N} … r_{b_{h+1}}(b_h) ∈ Φ_af⁻ を満たさない最初の h（1 始まり）"""
    for h in range(len(bs)):
        image = bs[h]
        for k in range(h + 1, len(bs)):
            image = reflections[k].act(image)
        if image.is_positive:
            return h + 1
    return None


def _product(system: RootSystem, reflections: Sequence[AffineElement]) -> AffineElement:
    x = affine_identity(system)
    for r in reflections:
        x = x * r
    return x


def admissible_from_values(entries: Sequence[Sequence[int]], u: WeylElement,
                           order: ReflectionOrder) -> AdmissibleType:
    entries = _normalize_entries(entries, order)
    bs = _affine_roots(entries, u, order)
    reflections = [affine_reflection(b) for b in bs]
    h = _first_violation(bs, reflections)
    if h is not None:
        raise DomainRejection("not_admissible", f"sign condition fails at h = {h}", h=h)
    return AdmissibleType(order, u, entries, _product(order.system, reflections))


def type_to_path(tau: AdmissibleType) -> LabelledPath:
    """
    型を w⁻¹u から u への増加道に写す

    辺 h は (β_{n_h}, m'_h)。m'_h は b'_h = r_{b_N} … r_{b_{h+1}}(−b_h) の水準で、
    b'_h のルート部分は辺 h の直前の頂点による β_{n_h} の像に一致する。
    """
    order = tau.order
    system = order.system
    bs = tau.affine_roots()
    reflections = [affine_reflection(b) for b in bs]
    vertex = tau.x.w.inverse * tau.u
    start = vertex
    edges = []
    for h, (n, _) in enumerate(tau.entries):
        rid = order.beta(n)
        image = -bs[h]
        for k in range(h + 1, len(bs)):
            image = reflections[k].act(image)
        if image.rid != vertex.perm[rid]:
            raise ConsistencyError("type does not match its path", {"h": h + 1, "x": tau.x.format()})
        edges.append((rid, image.level))
        vertex = vertex * system.reflection(rid)
    if vertex != tau.u:
        raise ConsistencyError("path from a type does not end at u", {"x": tau.x.format(), "u": tau.u.format()})
    return LabelledPath(start, tuple(edges))


def path_to_type(p: LabelledPath, order: ReflectionOrder, n: int) -> AdmissibleType:
    """type_to_path の逆写像。u は道の終点"""
    system = order.system
    if not p.is_increasing(order, n):
        raise DomainRejection("not_increasing", f"path is not increasing and bounded by {n}", bound=n)
    u = p.end
    positions = [order.position[rid] for rid, _ in p.edges]
    primes = [
        AffineRoot(system, vertex.perm[rid], m)
        for vertex, (rid, m) in zip(p.vertices, p.edges)
    ]
    count = len(primes)
    bs: List[Optional[AffineRoot]] = [None] * count
    reflections: List[Optional[AffineElement]] = [None] * count
    for h in range(count - 1, -1, -1):
        # −b_h = r_{b_{h+1}} … r_{b_N}(b'_h)
        image = primes[h]
        for k in range(count - 1, h, -1):
            image = reflections[k].act(image)
        b = -image
        if b.rid != u.perm[order.beta(positions[h])]:
            raise ConsistencyError("recovered root does not match u β", {"h": h + 1})
        bs[h] = b
        reflections[h] = affine_reflection(b)
    entries = [(positions[h], bs[h].level) for h in range(count)]
    return admissible_from_values(entries, u, order)


def enumerate_admissible_types(x: AffineElement, u: WeylElement, order: ReflectionOrder,
                               n: int) -> List[AdmissibleType]:
    """wt(p) = u⁻¹wμ の道 p ∈ paths(w⁻¹u ⇒ u) を列挙して型へ引き戻す"""
    start = x.w.inverse * u
    target = (u.inverse * x.w).act_coweight(x.mu)
    types = [path_to_type(p, order, n) for p in enumerate_increasing_paths(order, n, start, u, target)]
    for tau in types:
        if tau.x != x:
            raise ConsistencyError("pulled-back type has a different product",
                                   {"expected": x.format(), "got": tau.x.format()})
    return sorted(types, key=lambda t: (t.cardinality, t.entries))


def brute_force_admissible_types(u: WeylElement, order: ReflectionOrder, n: int,
                                 value_bound: int) -> Dict[AffineElement, List[AdmissibleType]]:
    """添字 ≤ n、|ν| ≤ value_bound の全ての値の組を直接判定して x ごとにまとめる"""
    system = order.system
    out: Dict[AffineElement, List[AdmissibleType]] = {}
    values = range(-value_bound, value_bound + 1)
    for size in range(n + 1):
        for indices in combinations(range(1, n + 1), size):
            for levels in product(values, repeat=size):
                entries = tuple(zip(indices, levels))
                bs = _affine_roots(entries, u, order)
                reflections = [affine_reflection(b) for b in bs]
                if _first_violation(bs, reflections) is not None:
                    continue
                x = _product(system, reflections)
                out.setdefault(x, []).append(AdmissibleType(order, u, entries, x))
    return out


def type_dimension(tau: AdmissibleType) -> int:
    """dim T = ½(N − ℓ_u(x))"""
    twice = tau.cardinality - ell_u(tau.x, tau.u)
    if twice % 2:
        raise ConsistencyError("type dimension is not integral", {"x": tau.x.format(), "twice": twice})
    return twice // 2


@dataclass
class IntersectionPiece:
    dim: int
    path: Optional[LabelledPath] = None
    admissible_type: Optional[AdmissibleType] = None

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {"dim": self.dim}
        if self.path is not None:
            d["path"] = self.path.to_dict()
        if self.admissible_type is not None:
            d["type"] = self.admissible_type.to_dict()
        return d


@dataclass
class IntersectionCensus:
    order: ReflectionOrder
    bound: int
    pieces: List[IntersectionPiece] = field(default_factory=list)

    @property
    def dimension(self) -> Optional[int]:
        return max((p.dim for p in self.pieces), default=None)

    @property
    def top_count(self) -> int:
        top = self.dimension
        return sum(1 for p in self.pieces if p.dim == top)

    def counts_by_dim(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for p in self.pieces:
            out[p.dim] = out.get(p.dim, 0) + 1
        return dict(sorted(out.items()))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pieces": [p.to_dict() for p in self.pieces],
            "dim": "empty" if self.dimension is None else self.dimension,
            "top_count": self.top_count,
            "order": self.order.format_word(),
            "bound": self.bound,
        }


def _half(twice: int, what: str) -> int:
    if twice % 2:
        raise ConsistencyError(f"{what} is not integral", {"twice": twice})
    return twice // 2


def suffix_order(u: WeylElement, v: WeylElement,
                 order: Optional[ReflectionOrder] = None) -> Tuple[ReflectionOrder, int]:
    """
    π_{≻n} = u⁻¹v となる (順序, n) を返す

    order 省略時は order_with_suffix の標準的な順序。指定時は n = #Φ⁺ − ℓ(u⁻¹v) で照合する。
    """
    g = u.inverse * v
    if order is None:
        return order_with_suffix(g)
    n = order.system.num_positive - g.length
    if pi_gt(order, n) != g:
        raise DomainRejection("order_mismatch", f"order {order.format()} does not end in u^-1 v = {g.format()}",
                              order=order.format(), suffix=g.format())
    return order, n


def semi_infinite_intersection(u: WeylElement, v: WeylElement, x: AffineElement, y: AffineElement,
                               order: Optional[ReflectionOrder] = None) -> IntersectionCensus:
    """
    paths(w_y⁻¹u ⇒ w_x⁻¹u)（u·wt(p) = w_yμ_y − w_xμ_x）を片として数える

    順序は u⁻¹v = π_{≻n} となるもの。片の次元は ½(ℓ_u(x) − ℓ_u(y) + ℓ(p))。
    次元ごとの個数はこの条件を満たす順序の選び方に依らない。
    """
    order, n = suffix_order(u, v, order)
    start = y.w.inverse * u
    end = x.w.inverse * u
    diff = tuple(a - b for a, b in zip(y.w.act_coweight(y.mu), x.w.act_coweight(x.mu)))
    target = u.inverse.act_coweight(diff)
    base = ell_u(x, u) - ell_u(y, u)
    census = IntersectionCensus(order, n)
    for p in enumerate_increasing_paths(order, n, start, end, target):
        census.pieces.append(IntersectionPiece(_half(base + p.length, "piece dimension"), path=p))
    return census


def intersection_via_types(u: WeylElement, v: WeylElement, x: AffineElement, y: AffineElement,
                           order: Optional[ReflectionOrder] = None) -> IntersectionCensus:
    """同じ国勢調査を (x⁻¹y, w_x⁻¹u, ≺) の許容型で数える"""
    order, n = suffix_order(u, v, order)
    base = ell_u(x, u) - ell_u(y, u)
    census = IntersectionCensus(order, n)
    for tau in enumerate_admissible_types(x.inverse * y, x.w.inverse * u, order, n):
        census.pieces.append(
            IntersectionPiece(_half(base + tau.cardinality, "piece dimension"), admissible_type=tau)
        )
    return census


def intersection_counts_from_wts(u: WeylElement, v: WeylElement, x: AffineElement,
                                 y: AffineElement) -> Dict[int, int]:
    """次元 d の片の個数 = wts(w_y⁻¹u ⇒ w_x⁻¹u ⇢ w_x⁻¹v) における (重み, 2d − ℓ_u(x) + ℓ_u(y)) の重複度"""
    weight = tuple(
        a - b for a, b in zip(
            (u.inverse * y.w).act_coweight(y.mu),
            (u.inverse * x.w).act_coweight(x.mu),
        )
    )
    base = ell_u(x, u) - ell_u(y, u)
    ms = wts_multiset(y.w.inverse * u, x.w.inverse * u, x.w.inverse * v, [weight])
    out: Dict[int, int] = {}
    for e in ms.lengths(weight):
        d = _half(base + e, "piece dimension")
        out[d] = out.get(d, 0) + 1
    return dict(sorted(out.items()))
