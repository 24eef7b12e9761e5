# -*- coding: utf-8 -*-
"""
bruhat_system - ルート系・ワイル群モジュール
有限型カルタン行列からルート・コルート・ペアリング表を構築し、
ワイル群の元を符号付きルート集合上の置換として正規化して扱う
"""

import re
from collections import deque
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import DomainRejection

Vector = Tuple[int, ...]

MAX_RANK = 8
# W(E6) の位数。これを超える群の全列挙は拒否する
DEFAULT_WEYL_ORDER_CAP = 51840

_LABEL_RE = re.compile(r"^([A-G])(\d+)$")


def parse_cartan_label(label: str) -> Tuple[str, int]:
    """"A2" / "B3" / "G2" 形式のラベルを (系列, 階数) に分解する"""
    token = (label or "").strip()
    m = _LABEL_RE.match(token)
    if m is None:
        raise DomainRejection("unknown_cartan_label", f"unknown Cartan label: {label}", token=label)
    series, rank = m.group(1), int(m.group(2))
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }[series]
    if not valid or rank > MAX_RANK:
        raise DomainRejection("unknown_cartan_label", f"unknown Cartan label: {label}", token=label)
    return series, rank


def cartan_matrix(series: str, rank: int) -> np.ndarray:
    """
    カルタン行列 A[i, j] = <α_i∨, α_j> を返す

    B_n は最後の単純ルートが短く、C_n は最後が長い。
    G2 は α1 が短い。F4 は α3, α4 が短い。
    """
    A = 2 * np.eye(rank, dtype=int)
    if series == "A":
        A[range(rank - 1), range(1, rank)] = -1
        A[range(1, rank), range(rank - 1)] = -1
    elif series in ("B", "C", "D", "E"):
        A[range(rank - 2), range(1, rank - 1)] = -1
        A[range(1, rank - 1), range(rank - 2)] = -1
        if series == "B":
            A[-2, -1] = -1
            A[-1, -2] = -2
        elif series == "C":
            A[-2, -1] = -2
            A[-1, -2] = -1
        elif series == "D":
            # 末尾ノードは後ろから 3 番目に接続
            A[-3, -1] = -1
            A[-1, -3] = -1
        else:
            A[-4, -1] = -1
            A[-1, -4] = -1
    elif series == "F":
        A[0, 1] = A[1, 0] = -1
        A[1, 2] = -1
        A[2, 1] = -2
        A[2, 3] = A[3, 2] = -1
    elif series == "G":
        A[0, 1] = -3
        A[1, 0] = -1
    return A


def format_vector(vec: Sequence[int]) -> str:
    return ",".join(str(int(c)) for c in vec)


class WeylElement:
    """
    ワイル群の元

    perm[r] はルート id r の像の id。等号・ハッシュは置換のみで決まる。
    """

    __slots__ = ("system", "perm", "_hash", "__dict__")

    def __init__(self, system: "RootSystem", perm: Tuple[int, ...]):
        self.system = system
        self.perm = perm
        self._hash = hash(perm)

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.perm == other.perm

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        # (vw)(r) = v(w(r))
        p = self.perm
        return WeylElement(self.system, tuple(p[r] for r in other.perm))

    def __repr__(self) -> str:
        return f"WeylElement({self.format()})"

    @cached_property
    def length(self) -> int:
        n = self.system.num_positive
        return sum(1 for r in range(n) if self.perm[r] >= n)

    @cached_property
    def inverse(self) -> "WeylElement":
        inv = [0] * len(self.perm)
        for r, image in enumerate(self.perm):
            inv[image] = r
        return WeylElement(self.system, tuple(inv))

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    def is_right_descent(self, i: int) -> bool:
        return self.perm[i] >= self.system.num_positive

    def is_left_descent(self, i: int) -> bool:
        return self.inverse.perm[i] >= self.system.num_positive

    def times_simple(self, i: int) -> "WeylElement":
        """w・s_i"""
        return self * self.system.simple_reflection(i)

    def simple_times(self, i: int) -> "WeylElement":
        """s_i・w"""
        return self.system.simple_reflection(i) * self

    @cached_property
    def word(self) -> Tuple[int, ...]:
        """最小左降下を貪欲に取った shortlex 最小の簡約語（0 始まり添字）"""
        letters: List[int] = []
        w = self
        while not w.is_identity:
            i = next(k for k in range(self.system.rank) if w.is_left_descent(k))
            letters.append(i)
            w = w.simple_times(i)
        return tuple(letters)

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.length, self.word)

    def __lt__(self, other: "WeylElement") -> bool:
        return self.sort_key < other.sort_key

    def format(self) -> str:
        if not self.word:
            return "e"
        return " ".join(f"s{i + 1}" for i in self.word)

    @cached_property
    def root_matrix(self) -> np.ndarray:
        """列 j が w(α_j) の係数（単純ルート基底）"""
        roots = self.system.roots
        return np.array([roots[self.perm[j]] for j in range(self.system.rank)], dtype=int).T

    @cached_property
    def coweight_matrix(self) -> np.ndarray:
        """列 j が w(α_j∨) の係数（単純コルート基底）"""
        coroots = self.system.coroots
        return np.array([coroots[self.perm[j]] for j in range(self.system.rank)], dtype=int).T

    def act_root(self, vec: Sequence[int]) -> Vector:
        return tuple(int(c) for c in self.root_matrix @ np.asarray(vec, dtype=int))

    def act_coweight(self, vec: Sequence[int]) -> Vector:
        return tuple(int(c) for c in self.coweight_matrix @ np.asarray(vec, dtype=int))


class RootSystem:
    """有限ルート系とそのワイル群（構築後は不変）"""

    def __init__(self, series: str, rank: int, weyl_order_cap: int = DEFAULT_WEYL_ORDER_CAP):
        self.series = series
        self.rank = rank
        self.weyl_order_cap = weyl_order_cap
        self.cartan_label = f"{series}{rank}"
        self.cartan = cartan_matrix(series, rank)
        self._A: List[List[int]] = self.cartan.tolist()

        coroot_of = self._close_under_simple_reflections()
        positive = sorted(
            (r for r in coroot_of if all(c >= 0 for c in r)),
            key=lambda r: (sum(r), tuple(-c for c in r)),
        )
        self.num_positive = len(positive)
        negative = [tuple(-c for c in r) for r in positive]
        self.roots: List[Vector] = positive + negative
        self.coroots: List[Vector] = [coroot_of[r] for r in self.roots]
        self.root_index: Dict[Vector, int] = {r: k for k, r in enumerate(self.roots)}
        self.coroot_index: Dict[Vector, int] = {c: k for k, c in enumerate(self.coroots)}

        roots_arr = np.array(self.roots, dtype=int)
        coroots_arr = np.array(self.coroots, dtype=int)
        # pairing[g, d] = <γ∨, δ>
        self.pairing: np.ndarray = coroots_arr @ self.cartan @ roots_arr.T
        self._pairing_rows: List[List[int]] = self.pairing.tolist()

        self.two_rho: Vector = tuple(int(c) for c in roots_arr[: self.num_positive].sum(axis=0))
        self.two_rho_check: Vector = tuple(int(c) for c in coroots_arr[: self.num_positive].sum(axis=0))
        self.length_class: List[str] = self._classify_lengths()

        self._simple_perms: List[Tuple[int, ...]] = [
            tuple(self.root_index[self._reflect_root(r, i)] for r in self.roots)
            for i in range(rank)
        ]
        self._reflection_cache: Dict[int, WeylElement] = {}
        self._elements: Optional[List[WeylElement]] = None

    # ----- 構築 -----

    def _reflect_root(self, beta: Vector, i: int) -> Vector:
        k = sum(self._A[i][j] * beta[j] for j in range(self.rank))
        return tuple(c - k if j == i else c for j, c in enumerate(beta))

    def _reflect_coroot(self, cvec: Vector, i: int) -> Vector:
        k = sum(cvec[j] * self._A[j][i] for j in range(self.rank))
        return tuple(c - k if j == i else c for j, c in enumerate(cvec))

    def _close_under_simple_reflections(self) -> Dict[Vector, Vector]:
        """単純ルートから単純鏡映で閉包を取り、ルート→コルートの対応を作る"""
        coroot_of: Dict[Vector, Vector] = {}
        queue = deque()
        for i in range(self.rank):
            e = tuple(int(i == j) for j in range(self.rank))
            coroot_of[e] = e
            queue.append(e)
        while queue:
            beta = queue.popleft()
            bc = coroot_of[beta]
            for i in range(self.rank):
                r = self._reflect_root(beta, i)
                if r not in coroot_of:
                    coroot_of[r] = self._reflect_coroot(bc, i)
                    queue.append(r)
        return coroot_of

    def _classify_lengths(self) -> List[str]:
        if self.simply_laced:
            return ["short"] * len(self.roots)
        # 対称化子 d_i: (α_i, α_j) = d_i A_ij
        d: List[Optional[Fraction]] = [None] * self.rank
        d[0] = Fraction(1)
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for j in range(self.rank):
                if j != i and self._A[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * self._A[i][j] / self._A[j][i]
                    queue.append(j)
        norms = [
            sum(r[i] * r[j] * d[i] * self._A[i][j] for i in range(self.rank) for j in range(self.rank))
            for r in self.roots
        ]
        top = max(norms)
        return ["long" if nrm == top else "short" for nrm in norms]

    @cached_property
    def simply_laced(self) -> bool:
        return all(
            self._A[i][j] * self._A[j][i] in (0, 1)
            for i in range(self.rank) for j in range(self.rank) if i != j
        )

    # ----- ルート -----

    @property
    def positive_ids(self) -> range:
        return range(self.num_positive)

    def is_positive_id(self, rid: int) -> bool:
        return rid < self.num_positive

    def negate_id(self, rid: int) -> int:
        n = self.num_positive
        return rid + n if rid < n else rid - n

    def root_id(self, vec: Sequence[int]) -> int:
        key = tuple(int(c) for c in vec)
        if key not in self.root_index:
            raise DomainRejection("not_a_root", f"not a root of {self.cartan_label}: {format_vector(key)}",
                                  token=format_vector(key))
        return self.root_index[key]

    def pairing_ids(self, coroot_id: int, root_id: int) -> int:
        return self._pairing_rows[coroot_id][root_id]

    @cached_property
    def highest_root_id(self) -> int:
        return max(self.positive_ids, key=lambda r: (sum(self.roots[r]), self.roots[r]))

    def support(self, rid: int) -> Tuple[int, ...]:
        return tuple(j for j, c in enumerate(self.roots[rid]) if c != 0)

    def positive_ids_in(self, J: Iterable[int]) -> List[int]:
        """Φ_J ∩ Φ⁺（台が J に含まれる正ルート）"""
        Jset = set(J)
        return [r for r in self.positive_ids if set(self.support(r)) <= Jset]

    @cached_property
    def additive_triples(self) -> List[Tuple[int, int, int]]:
        """α + β = γ となる正ルート id の組 (α, β, γ)、α < β"""
        triples = []
        for a in self.positive_ids:
            for b in range(a + 1, self.num_positive):
                s = tuple(x + y for x, y in zip(self.roots[a], self.roots[b]))
                c = self.root_index.get(s)
                if c is not None:
                    triples.append((a, b, c))
        return triples

    def check_vector(self, vec: Sequence[int], what: str = "vector") -> Vector:
        if len(vec) != self.rank:
            raise DomainRejection("dimension_mismatch",
                                  f"{what} has {len(vec)} entries, {self.cartan_label} needs {self.rank}",
                                  token=format_vector(vec))
        return tuple(int(c) for c in vec)

    def pair(self, mu: Sequence[int], alpha: Sequence[int]) -> int:
        """<μ, α>（μ はコルート基底、α はルート基底）"""
        mu = self.check_vector(mu, "coweight")
        alpha = self.check_vector(alpha, "root vector")
        return int(np.asarray(mu) @ self.cartan @ np.asarray(alpha))

    def pair_id(self, mu: Sequence[int], rid: int) -> int:
        root = self.roots[rid]
        return sum(mu[i] * self._A[i][j] * root[j] for i in range(self.rank) for j in range(self.rank) if root[j])

    def height_check(self, rid: int) -> int:
        """<2ρ∨, β>"""
        return self.pair(self.two_rho_check, self.roots[rid])

    # ----- ワイル群 -----

    @cached_property
    def identity(self) -> WeylElement:
        return WeylElement(self, tuple(range(len(self.roots))))

    def simple_reflection(self, i: int) -> WeylElement:
        return self._simple_elements[i]

    @cached_property
    def _simple_elements(self) -> List[WeylElement]:
        return [WeylElement(self, p) for p in self._simple_perms]

    def from_word(self, word: Iterable[int]) -> WeylElement:
        w = self.identity
        for i in word:
            if not 0 <= i < self.rank:
                raise DomainRejection("bad_word", f"simple reflection index out of range: s{i + 1}", token=f"s{i + 1}")
            w = w.times_simple(i)
        return w

    def reflection(self, rid: int) -> WeylElement:
        """s_β（β は任意のルート id、s_β = s_{-β}）"""
        if rid >= self.num_positive:
            rid = self.negate_id(rid)
        cached = self._reflection_cache.get(rid)
        if cached is not None:
            return cached
        beta = self.roots[rid]
        row = self._pairing_rows[rid]
        perm = tuple(
            self.root_index[tuple(g - row[k] * b for g, b in zip(gamma, beta))]
            for k, gamma in enumerate(self.roots)
        )
        element = WeylElement(self, perm)
        self._reflection_cache[rid] = element
        return element

    def weyl_act(self, w: WeylElement, vec: Sequence[int], lattice: str = "root") -> Vector:
        vec = self.check_vector(vec)
        if lattice == "root":
            return w.act_root(vec)
        if lattice == "coweight":
            return w.act_coweight(vec)
        raise DomainRejection("bad_lattice", f"unknown lattice: {lattice}", token=lattice)

    def bruhat_leq(self, v: WeylElement, w: WeylElement) -> bool:
        """Deodhar の Z 性質による再帰判定"""
        while True:
            if v.length > w.length:
                return False
            if v.is_identity:
                return True
            i = next(k for k in range(self.rank) if w.is_right_descent(k))
            if v.is_right_descent(i):
                v = v.times_simple(i)
            w = w.times_simple(i)

    def longest_element(self, J: Optional[Iterable[int]] = None) -> WeylElement:
        """W_J の最長元（J 省略時は w₀）"""
        J = sorted(set(range(self.rank) if J is None else J))
        for i in J:
            if not 0 <= i < self.rank:
                raise DomainRejection("bad_subset", f"simple root index out of range: {i + 1}", token=str(i + 1))
        w = self.identity
        while True:
            step = next((i for i in J if not w.is_right_descent(i)), None)
            if step is None:
                return w
            w = w.times_simple(step)

    @cached_property
    def w0(self) -> WeylElement:
        return self.longest_element()

    def parabolic_elements(self, J: Iterable[int]) -> List[WeylElement]:
        J = sorted(set(J))
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            w = queue.popleft()
            for i in J:
                nxt = w.times_simple(i)
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return sorted(seen)

    def elements(self, cap: Optional[int] = None) -> List[WeylElement]:
        """W の全元を (長さ, 語) 順で返す。cap 省略時は weyl_order_cap"""
        if cap is None:
            cap = self.weyl_order_cap
        if self._elements is not None:
            if len(self._elements) > cap:
                raise self._size_cap(cap)
            return self._elements
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            w = queue.popleft()
            for i in range(self.rank):
                nxt = w.times_simple(i)
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > cap:
                        raise self._size_cap(cap)
                    queue.append(nxt)
        self._elements = sorted(seen)
        return self._elements

    def _size_cap(self, cap: int) -> DomainRejection:
        return DomainRejection("size_cap",
                               f"Weyl group of {self.cartan_label} exceeds enumeration cap {cap}",
                               cap=cap)

    def is_dominant(self, mu: Sequence[int]) -> bool:
        return all(self.pair(mu, self.roots[i]) >= 0 for i in range(self.rank))

    def is_regular(self, mu: Sequence[int]) -> bool:
        return all(self.pair(mu, self.roots[i]) > 0 for i in range(self.rank))

    def dominant_rep(self, mu: Sequence[int]) -> Tuple[Vector, WeylElement]:
        """
        (λ, v) を返す。λ = v⁻¹μ は支配的で、v はそのような元のうち最短

        負のペアリングを持つ最小添字 i で μ' ← s_i μ', v ← v s_i を繰り返す。
        """
        lam = list(self.check_vector(mu, "coweight"))
        v = self.identity
        while True:
            pairings = [sum(lam[j] * self._A[j][i] for j in range(self.rank)) for i in range(self.rank)]
            i = next((k for k, p in enumerate(pairings) if p < 0), None)
            if i is None:
                return tuple(lam), v
            lam[i] -= pairings[i]
            v = v.times_simple(i)

    # ----- 文字列形式 -----

    def parse_word(self, text: str) -> WeylElement:
        """"s1 s2 s1" / "e" / "w0" を読む"""
        token = (text or "").strip()
        if token in ("e", "1", ""):
            return self.identity
        if token == "w0":
            return self.w0
        letters = []
        for part in token.replace(",", " ").split():
            m = re.fullmatch(r"s(\d+)", part)
            if m is None or not 1 <= int(m.group(1)) <= self.rank:
                raise DomainRejection("bad_word", f"not a simple reflection of {self.cartan_label}: {part}", token=part)
            letters.append(int(m.group(1)) - 1)
        return self.from_word(letters)

    def parse_coweight(self, text: str) -> Vector:
        try:
            values = tuple(int(p) for p in (text or "").split(","))
        except ValueError:
            raise DomainRejection("bad_coweight", f"not an integer vector: {text}", token=text)
        return self.check_vector(values, "coweight")

    def parse_root(self, text: str) -> int:
        return self.root_id(self.parse_coweight(text))

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan_label})"

    def to_dict(self) -> Dict[str, object]:
        n = self.num_positive
        return {
            "cartan_label": self.cartan_label,
            "rank": self.rank,
            "cartan_matrix": self._A,
            "positive_roots": [list(r) for r in self.roots[:n]],
            "positive_coroots": [list(c) for c in self.coroots[:n]],
            "length_class": self.length_class[:n],
            "two_rho": list(self.two_rho),
            "two_rho_check": list(self.two_rho_check),
            "simply_laced": self.simply_laced,
        }


@lru_cache(maxsize=None)
def build_root_system(label: str, max_weyl_order: int = DEFAULT_WEYL_ORDER_CAP) -> RootSystem:
    """max_weyl_order は elements() の列挙上限"""
    series, rank = parse_cartan_label(label)
    return RootSystem(series, rank, max_weyl_order)
