# -*- coding: utf-8 -*-
"""
bruhat_system - 鏡映順序モジュール
w₀ の簡約語から正ルートの全順序を作り、列挙・凸性検査・接尾積 π_{≻n} を扱う
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.errors import DomainRejection
from core.rootsys import RootSystem, WeylElement, format_vector

DEFAULT_MAX_ENUMERATION_RANK = 4


@dataclass(frozen=True)
class ReflectionOrder:
    """
    β_1 ≺ … ≺ β_N（正ルート id の列）と、それを生成する w₀ の簡約語

    β_i = s_{a_1} … s_{a_{i-1}}(α_{a_i})
    """

    system: RootSystem = field(compare=False, repr=False)
    roots: Tuple[int, ...]
    word: Tuple[int, ...]

    @cached_property
    def position(self) -> Dict[int, int]:
        """正ルート id → 1 始まりの順位"""
        return {rid: k + 1 for k, rid in enumerate(self.roots)}

    def beta(self, i: int) -> int:
        return self.roots[i - 1]

    def __len__(self) -> int:
        return len(self.roots)

    def reversed(self) -> "ReflectionOrder":
        return order_from_roots(self.system, tuple(reversed(self.roots)))

    def transported(self) -> "ReflectionOrder":
        """α ≺' β ⟺ −w₀α ≺ −w₀β となる順序"""
        w0 = self.system.w0
        system = self.system
        return order_from_roots(system, tuple(system.negate_id(w0.perm[r]) for r in self.roots))

    def root_vectors(self) -> List[List[int]]:
        return [list(self.system.roots[r]) for r in self.roots]

    def format(self) -> str:
        return ";".join(format_vector(self.system.roots[r]) for r in self.roots)

    def format_word(self) -> str:
        return " ".join(f"s{i + 1}" for i in self.word)

    def to_dict(self) -> dict:
        return {"roots": self.root_vectors(), "word": self.format_word()}


def _roots_of_word(system: RootSystem, word: Sequence[int]) -> List[int]:
    prefix = system.identity
    out = []
    for i in word:
        out.append(prefix.perm[i])
        prefix = prefix.times_simple(i)
    return out


def order_from_reduced_word(system: RootSystem, word: Sequence[int]) -> ReflectionOrder:
    """w₀ の簡約語から順序を作る。簡約でない・積が w₀ でない場合は拒否"""
    word = tuple(word)
    prefix = system.identity
    for k, i in enumerate(word):
        if not 0 <= i < system.rank:
            raise DomainRejection("bad_word", f"simple reflection index out of range: s{i + 1}", position=k + 1)
        if prefix.is_right_descent(i):
            raise DomainRejection("not_reduced", f"word is not reduced at position {k + 1}", position=k + 1)
        prefix = prefix.times_simple(i)
    if prefix != system.w0:
        raise DomainRejection("not_longest", "word does not multiply to the longest element",
                              length=len(word), expected=system.num_positive)
    return ReflectionOrder(system, tuple(_roots_of_word(system, word)), word)


def reduced_words(w: WeylElement) -> Iterator[Tuple[int, ...]]:
    """w の簡約語を左降下の昇順 DFS で辞書順に生成"""
    if w.is_identity:
        yield ()
        return
    for i in range(w.system.rank):
        if w.is_left_descent(i):
            for rest in reduced_words(w.simple_times(i)):
                yield (i,) + rest


def count_reduced_words(w: WeylElement, _memo: Optional[Dict[WeylElement, int]] = None) -> int:
    """簡約語の個数（左降下についてのメモ化再帰）"""
    memo = {} if _memo is None else _memo
    if w.is_identity:
        return 1
    if w in memo:
        return memo[w]
    total = sum(
        count_reduced_words(w.simple_times(i), memo)
        for i in range(w.system.rank) if w.is_left_descent(i)
    )
    memo[w] = total
    return total


def enumerate_orders(system: RootSystem, max_rank: int = DEFAULT_MAX_ENUMERATION_RANK) -> Iterator[ReflectionOrder]:
    if system.rank > max_rank:
        raise DomainRejection(
            "size_cap",
            f"rank {system.rank} exceeds enumeration cap {max_rank}; pass an explicit reduced word instead",
            cap=max_rank,
        )
    for word in reduced_words(system.w0):
        yield ReflectionOrder(system, tuple(_roots_of_word(system, word)), word)


def canonical_order(system: RootSystem) -> ReflectionOrder:
    """shortlex 最小の w₀ の簡約語から得る順序"""
    return order_from_reduced_word(system, system.w0.word)


def _as_ids(system: RootSystem, seq: Sequence) -> Tuple[int, ...]:
    ids = tuple(r if isinstance(r, int) else system.root_id(r) for r in seq)
    if sorted(ids) != list(system.positive_ids):
        raise DomainRejection("not_a_permutation", "sequence is not a permutation of the positive roots",
                              length=len(ids))
    return ids


def is_reflection_order(system: RootSystem, seq: Sequence) -> bool:
    """全ての加法的三つ組で α+β が α と β の間にあるか"""
    ids = _as_ids(system, seq)
    pos = {rid: k for k, rid in enumerate(ids)}
    for a, b, c in system.additive_triples:
        lo, hi = sorted((pos[a], pos[b]))
        if not lo < pos[c] < hi:
            return False
    return True


def order_from_roots(system: RootSystem, seq: Sequence) -> ReflectionOrder:
    """ルート列から順序を復元する（α_{a_k} = p_{k−1}⁻¹ β_k が単純ルート）"""
    ids = _as_ids(system, seq)
    if not is_reflection_order(system, ids):
        raise DomainRejection("not_a_reflection_order", "sequence violates convexity")
    prefix = system.identity
    word = []
    for k, rid in enumerate(ids):
        simple = prefix.inverse.perm[rid]
        if simple >= system.rank:
            raise DomainRejection("not_a_reflection_order", f"root {k + 1} is not reachable", position=k + 1)
        word.append(simple)
        prefix = prefix.times_simple(simple)
    return ReflectionOrder(system, ids, tuple(word))


def pi_gt(order: ReflectionOrder, n: int) -> WeylElement:
    """π_{≻n} = s_{β_{n+1}} … s_{β_N}"""
    system = order.system
    if not 0 <= n <= len(order):
        raise DomainRejection("index_out_of_range", f"bound {n} outside 0..{len(order)}", bound=n)
    w = system.identity
    for rid in order.roots[n:]:
        w = w * system.reflection(rid)
    return w


def order_with_suffix(g: WeylElement) -> Tuple[ReflectionOrder, int]:
    """
    π_{≻n} = g となる (順序, n) を作る

    語は shortlex(g w₀) の後ろに shortlex(w₀ g⁻¹ w₀) を連結したもの。
    """
    system = g.system
    w0 = system.w0
    head = (g * w0).word
    tail = (w0 * g.inverse * w0).word
    order = order_from_reduced_word(system, head + tail)
    return order, system.num_positive - g.length


def parse_order(system: RootSystem, text: Optional[str]) -> ReflectionOrder:
    """語（"s1 s2 s1"）かルート列（"1,0;1,1;0,1"）を受け付ける。空なら標準順序"""
    token = (text or "").strip()
    if not token:
        return canonical_order(system)
    if "s" not in token:
        parts = [p for p in token.split(";") if p.strip()]
        return order_from_roots(system, [system.parse_coweight(p) for p in parts])
    return order_from_reduced_word(system, _letters(system, token))


def _letters(system: RootSystem, token: str) -> Tuple[int, ...]:
    letters = []
    for part in token.split():
        if not part.startswith("s") or not part[1:].isdigit() or not 1 <= int(part[1:]) <= system.rank:
            raise DomainRejection("bad_word", f"not a simple reflection of {system.cartan_label}: {part}", token=part)
        letters.append(int(part[1:]) - 1)
    return tuple(letters)


def all_permutation_orders(system: RootSystem) -> Iterator[Tuple[int, ...]]:
    """正ルートの全順列（小さい型での特徴付け検査用）"""
    return permutations(system.positive_ids)
