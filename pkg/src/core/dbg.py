# -*- coding: utf-8 -*-
"""
bruhat_system - 二重ブリュア・グラフモジュール
辺集合、順序 ≺ に関して増加かつ n で有界なラベル付き道の列挙、
重み多重集合 wts(u⇒v⇢v′)、道の対称性、非空性と最大長、ヤン・バクスター作用素オラクル
"""

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from core.errors import DomainRejection
from core.reforder import ReflectionOrder, order_with_suffix
from core.rootsys import RootSystem, Vector, WeylElement

# (終点, 重み, 短ルート辺数, 長ルート辺数) → 個数
CensusKey = Tuple[WeylElement, Vector, int, int]
Census = Dict[CensusKey, int]
# (重み, 長さ, 短, 長)
MultisetKey = Tuple[Vector, int, int, int]


@dataclass(frozen=True)
class LabelledPath:
    """始点と (ルート id, ラベル) の辺列で表すラベル付き道"""

    start: WeylElement
    edges: Tuple[Tuple[int, int], ...] = ()

    @property
    def system(self) -> RootSystem:
        return self.start.system

    @cached_property
    def vertices(self) -> List[WeylElement]:
        out = [self.start]
        for rid, _ in self.edges:
            out.append(out[-1] * self.system.reflection(rid))
        return out

    @property
    def end(self) -> WeylElement:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.edges)

    @cached_property
    def weight(self) -> Vector:
        total = [0] * self.system.rank
        for rid, m in self.edges:
            for j, c in enumerate(self.system.coroots[rid]):
                total[j] += m * c
        return tuple(total)

    @property
    def long_count(self) -> int:
        return sum(1 for rid, _ in self.edges if self.system.length_class[rid] == "long")

    @property
    def short_count(self) -> int:
        return self.length - self.long_count

    def satisfies_label_bounds(self) -> bool:
        # m_i ≥ Φ⁺(−u_i α_i)
        return all(m >= label_floor(u, rid) for u, (rid, m) in zip(self.vertices, self.edges))

    def is_increasing(self, order: ReflectionOrder, bound: Optional[int] = None) -> bool:
        positions = [order.position.get(rid) for rid, _ in self.edges]
        if any(p is None for p in positions):
            return False
        if bound is not None and positions and positions[-1] > bound:
            return False
        return all(a < b for a, b in zip(positions, positions[1:]))

    def to_dict(self) -> dict:
        return {
            "start": self.start.format(),
            "edges": [{"root": list(self.system.roots[rid]), "label": m} for rid, m in self.edges],
        }


@dataclass
class WeightMultiset:
    """wts の窓付き国勢調査。キーは (重み, 長さ, 短, 長)"""

    entries: Dict[MultisetKey, int] = field(default_factory=dict)
    window: FrozenSet[Vector] = frozenset()

    def multiplicity(self, weight: Sequence[int], length: Optional[int] = None) -> int:
        weight = tuple(weight)
        return sum(
            m for (w, e, _, _), m in self.entries.items()
            if w == weight and (length is None or e == length)
        )

    def coarse(self) -> Dict[Tuple[Vector, int], int]:
        out: Dict[Tuple[Vector, int], int] = {}
        for (w, e, _, _), m in self.entries.items():
            out[(w, e)] = out.get((w, e), 0) + m
        return out

    def lengths(self, weight: Sequence[int]) -> List[int]:
        """指定重みの長さを重複込みで昇順に返す"""
        weight = tuple(weight)
        out: List[int] = []
        for (w, e, _, _), m in sorted(self.entries.items()):
            if w == weight:
                out.extend([e] * m)
        return sorted(out)

    def is_empty(self) -> bool:
        return not self.entries

    def max_length(self) -> Optional[int]:
        return max((e for _, e, _, _ in self.entries), default=None)

    def to_list(self) -> List[dict]:
        return [
            {"weight": list(w), "length": e, "short": s, "long": l, "mult": m}
            for (w, e, s, l), m in sorted(self.entries.items())
        ]

    def to_dict(self) -> dict:
        return {"entries": self.to_list(), "window": [list(w) for w in sorted(self.window)]}


def label_floor(vertex: WeylElement, rid: int) -> int:
    return 1 if vertex.perm[rid] >= vertex.system.num_positive else 0


def _label_ceiling(residual: Sequence[int], coroot: Sequence[int]) -> Optional[int]:
    """残余 residual を超えない最大ラベル。残余が負なら None"""
    if any(r < 0 for r in residual):
        return None
    return min(r // c for r, c in zip(residual, coroot) if c > 0)


def window_box(window: Iterable[Sequence[int]], rank: int) -> Vector:
    """窓の各座標の最大値（負は 0 に切り上げ）"""
    box = [0] * rank
    for w in window:
        for j, c in enumerate(w):
            box[j] = max(box[j], c)
    return tuple(box)


def box_window(upper: Sequence[int]) -> FrozenSet[Vector]:
    """0 ≤ ω ≤ upper を満たす全ての ω"""
    return frozenset(product(*(range(c + 1) for c in upper)))


def parse_window(system: RootSystem, text: str) -> FrozenSet[Vector]:
    """"2rho" は 0 ≤ ω ≤ 2ρ∨ の箱、それ以外は ";" 区切りのコウェイト列"""
    token = (text or "").strip()
    if token == "2rho":
        return box_window(system.two_rho_check)
    parts = [p for p in token.split(";") if p.strip()]
    if not parts:
        raise DomainRejection("empty_window", "weight window must be non-empty")
    return frozenset(system.parse_coweight(p) for p in parts)


def dbg_edges(system: RootSystem) -> List[Tuple[WeylElement, int, WeylElement]]:
    """全ての辺 w →^α ws_α"""
    return [
        (w, rid, w * system.reflection(rid))
        for w in system.elements() for rid in system.positive_ids
    ]


def _step(system: RootSystem, states: Census, rid: int, box: Vector) -> Census:
    """β = rid を使わない状態と、使って一本辺を足した状態を合わせる"""
    coroot = system.coroots[rid]
    refl = system.reflection(rid)
    is_long = system.length_class[rid] == "long"
    out: Census = dict(states)
    for (vertex, weight, s, l), count in states.items():
        residual = tuple(b - w for b, w in zip(box, weight))
        ceiling = _label_ceiling(residual, coroot)
        floor = label_floor(vertex, rid)
        if ceiling is None or floor > ceiling:
            continue
        target = vertex * refl
        for m in range(floor, ceiling + 1):
            key = (
                target,
                tuple(w + m * c for w, c in zip(weight, coroot)),
                s + (0 if is_long else 1),
                l + (1 if is_long else 0),
            )
            out[key] = out.get(key, 0) + count
    return out


def census_by_bound(order: ReflectionOrder, u: WeylElement, box: Vector) -> List[Census]:
    """
    各 n = 0..N について、u から出る増加道（n で有界、重み ≤ box）の国勢調査を返す

    位置を一つずつ進める動的計画法。snapshots[n] が上限 n の結果。
    """
    system = order.system
    states: Census = {(u, (0,) * system.rank, 0, 0): 1}
    snapshots = [states]
    for rid in order.roots:
        states = _step(system, states, rid, box)
        snapshots.append(states)
    return snapshots


def path_census(order: ReflectionOrder, n: int, u: WeylElement, box: Vector) -> Census:
    _check_bound(order, n)
    system = order.system
    states: Census = {(u, (0,) * system.rank, 0, 0): 1}
    for rid in order.roots[:n]:
        states = _step(system, states, rid, box)
    return states


def census_to_multiset(census: Census, v: WeylElement, window: FrozenSet[Vector]) -> WeightMultiset:
    entries: Dict[MultisetKey, int] = {}
    for (end, weight, s, l), count in census.items():
        if end == v and weight in window:
            key = (weight, s + l, s, l)
            entries[key] = entries.get(key, 0) + count
    return WeightMultiset(entries, frozenset(window))


def _check_bound(order: ReflectionOrder, n: int) -> None:
    if not 0 <= n <= len(order):
        raise DomainRejection("index_out_of_range", f"bound {n} outside 0..{len(order)}", bound=n)


def wts_with_order(order: ReflectionOrder, n: int, u: WeylElement, v: WeylElement,
                   window: Iterable[Sequence[int]]) -> WeightMultiset:
    """与えた順序と上限 n での Π{(wt(p), ℓ(p))}"""
    window = frozenset(tuple(w) for w in window)
    if not window:
        raise DomainRejection("empty_window", "weight window must be non-empty")
    box = window_box(window, order.system.rank)
    return census_to_multiset(path_census(order, n, u, box), v, window)


def wts_multiset(u: WeylElement, v: WeylElement, v2: WeylElement,
                 window: Iterable[Sequence[int]]) -> WeightMultiset:
    """wts(u⇒v⇢v2)。内部順序は order_with_suffix(v⁻¹v2)"""
    order, n = order_with_suffix(v.inverse * v2)
    return wts_with_order(order, n, u, v, window)


def enumerate_increasing_paths(order: ReflectionOrder, n: int, u: WeylElement, v: WeylElement,
                               target_weight: Sequence[int]) -> List[LabelledPath]:
    """重みを固定した増加道を深さ優先で全列挙する"""
    _check_bound(order, n)
    system = order.system
    target = system.check_vector(target_weight, "weight")
    results: List[LabelledPath] = []

    def dfs(pos: int, vertex: WeylElement, residual: Vector, edges: Tuple[Tuple[int, int], ...]) -> None:
        if vertex == v and not any(residual):
            results.append(LabelledPath(u, edges))
        for k in range(pos, n):
            rid = order.roots[k]
            coroot = system.coroots[rid]
            ceiling = _label_ceiling(residual, coroot)
            floor = label_floor(vertex, rid)
            if ceiling is None or floor > ceiling:
                continue
            nxt = vertex * system.reflection(rid)
            for m in range(floor, ceiling + 1):
                dfs(k + 1, nxt, tuple(r - m * c for r, c in zip(residual, coroot)), edges + ((rid, m),))

    if all(c >= 0 for c in target):
        dfs(0, u, target, ())
    return results


def unlabelled_path_lengths(order: ReflectionOrder, n: int, u: WeylElement) -> Dict[WeylElement, Set[int]]:
    """ラベルを忘れた増加道の終点ごとの長さ集合（窓に依らない非空性判定用）"""
    _check_bound(order, n)
    system = order.system
    states: Set[Tuple[WeylElement, int]] = {(u, 0)}
    for rid in order.roots[:n]:
        refl = system.reflection(rid)
        states = states | {(vertex * refl, e + 1) for vertex, e in states}
    out: Dict[WeylElement, Set[int]] = {}
    for vertex, e in states:
        out.setdefault(vertex, set()).add(e)
    return out


def path_dual(p: LabelledPath, order: ReflectionOrder) -> LabelledPath:
    """w₀w_{ℓ+1} → … → w₀w_1（逆順序に関して増加、重みと長さを保つ）"""
    w0 = p.system.w0
    return LabelledPath(w0 * p.end, tuple(reversed(p.edges)))


def path_minus_w0(p: LabelledPath, order: ReflectionOrder) -> LabelledPath:
    """頂点を w₀ w_i w₀、ラベルを (−w₀α_i, m_i) に移す"""
    system = p.system
    w0 = system.w0
    edges = tuple((system.negate_id(w0.perm[rid]), m) for rid, m in p.edges)
    return LabelledPath(w0 * p.start * w0, edges)


def max_increasing_length(u: WeylElement, v: WeylElement, v2: WeylElement) -> Optional[int]:
    """v⁻¹v2 ≤ u⁻¹v2 なら ℓ(u⁻¹v2) − ℓ(v⁻¹v2)、それ以外は None"""
    system = u.system
    lower = v.inverse * v2
    upper = u.inverse * v2
    if not system.bruhat_leq(lower, upper):
        return None
    return upper.length - lower.length


OracleKey = Tuple[WeylElement, Vector, int, int, int]
# (重み, κ_s 指数, κ_l 指数) → 係数
Poly = Dict[Tuple[Vector, int, int], int]
# 作用素の行: g ↦ Σ_h (係数の多項式) h
Operator = Dict[WeylElement, Dict[WeylElement, Poly]]


def _poly_mul(a: Poly, b: Poly, box: Vector) -> Poly:
    """重みが box を超える単項式は捨てる"""
    out: Poly = {}
    for (w1, s1, l1), c1 in a.items():
        for (w2, s2, l2), c2 in b.items():
            weight = tuple(x + y for x, y in zip(w1, w2))
            if any(x > b_ for x, b_ in zip(weight, box)):
                continue
            key = (weight, s1 + s2, l1 + l2)
            out[key] = out.get(key, 0) + c1 * c2
    return out


def _yb_operator(system: RootSystem, rid: int, box: Vector, dual_long: bool) -> Operator:
    """R_β を W の各元 g の像として表に展開する"""
    coroot = system.coroots[rid]
    refl = system.reflection(rid)
    big = system.num_positive
    zero = (0,) * system.rank
    table: Operator = {}
    for g in system.elements():
        row: Dict[WeylElement, Poly] = {g: {(zero, 0, 0): 1}}
        poly: Poly = {}
        i = 1 if g.inverse.perm[rid] >= big else 0
        while all(i * c <= b for c, b in zip(coroot, box)):
            key = (tuple(i * c for c in coroot), 0 if dual_long else 1, 1 if dual_long else 0)
            poly[key] = 1
            i += 1
        if poly:
            row[refl * g] = poly
        table[g] = row
    return table


def _compose(left: Operator, right: Operator, box: Vector) -> Operator:
    """(left ∘ right)(g) = Σ_h right[g][h] · left(h)"""
    out: Operator = {}
    for g, row in right.items():
        image: Dict[WeylElement, Poly] = {}
        for h, coeff in row.items():
            for k, poly in left[h].items():
                acc = image.setdefault(k, {})
                for key, c in _poly_mul(coeff, poly, box).items():
                    acc[key] = acc.get(key, 0) + c
        out[g] = image
    return out


@lru_cache(maxsize=64)
def _composed_operator(system: RootSystem, roots: Tuple[int, ...], box: Vector) -> Operator:
    """roots = (β_1, …, β_n) に対し R_{β_n} ∘ … ∘ R_{β_1} を左側から順に合成した作用素"""
    swap = not system.simply_laced
    zero = (0,) * system.rank
    composed: Operator = {g: {g: {(zero, 0, 0): 1}} for g in system.elements()}
    for rid in reversed(roots):
        dual_long = (system.length_class[rid] == "short") if swap else False
        composed = _compose(composed, _yb_operator(system, rid, box, dual_long), box)
    return composed


def yb_compose_oracle(order: ReflectionOrder, n: int, u: WeylElement,
                      window: Iterable[Sequence[int]]) -> Dict[OracleKey, int]:
    """
    群環の形式級数として R_{β_n} … R_{β_1} u⁻¹ を窓で打ち切って計算する

    R_β(g) = g + Σ_{i ≥ Φ⁺(−g⁻¹β)} κ e^{iβ∨} s_β g。
    R_β は左側の係数 e^λ κ について線形なので、各 R_β を W 上の行列として表し、
    道を辿らずに作用素どうしを先に（左から）合成してから u⁻¹ に当てる。
    κ は双対ルート系の長さで記録する（単純レース型では入れ替えない）。
    結果のキーは (頂点 g⁻¹, 重み, 短, 長, 長さ)。
    """
    _check_bound(order, n)
    system = order.system
    window = frozenset(tuple(w) for w in window)
    box = window_box(window, system.rank)
    swap = not system.simply_laced

    out: Dict[OracleKey, int] = {}
    for g, poly in _composed_operator(system, order.roots[:n], box)[u.inverse].items():
        for (weight, ks, kl), coeff in poly.items():
            if weight not in window or coeff == 0:
                continue
            # κ_l^{ℓ_s} κ_s^{ℓ_l} の読み替え
            short, long_ = (kl, ks) if swap else (ks, kl)
            key = (g.inverse, weight, short, long_, short + long_)
            out[key] = out.get(key, 0) + coeff
    return out


def census_as_oracle_map(census: Census, window: FrozenSet[Vector]) -> Dict[OracleKey, int]:
    """国勢調査をオラクルと同じキー形式に直す"""
    out: Dict[OracleKey, int] = {}
    for (end, weight, s, l), count in census.items():
        if weight in window:
            out[(end, weight, s, l, s + l)] = count
    return out
