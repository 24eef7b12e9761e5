# -*- coding: utf-8 -*-
"""
bruhat_system - 拡大アフィンワイル群モジュール
x = w t^μ の積・逆元・アフィンルートへの作用、アフィン鏡映、
長さ汎関数 ℓ(x, γ) と ℓ_u(x)、岩堀・松本長さ、LP(x)、η(x)、仮想次元
"""

from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from core.errors import ConsistencyError, DomainRejection
from core.rootsys import RootSystem, Vector, WeylElement, format_vector


def positivity(system: RootSystem, rid: int) -> int:
    """Φ⁺(γ): γ が正ルートなら 1"""
    return 1 if system.is_positive_id(rid) else 0


@dataclass(frozen=True)
class AffineRoot:
    """アフィンルート (α, n)。α はルート id で保持する"""

    system: RootSystem
    rid: int
    level: int

    @property
    def root(self) -> Vector:
        return self.system.roots[self.rid]

    @property
    def is_positive(self) -> bool:
        # (α, n) ∈ Φ_af⁺ ⟺ n ≥ Φ⁺(−α)
        return self.level >= positivity(self.system, self.system.negate_id(self.rid))

    def __neg__(self) -> "AffineRoot":
        return AffineRoot(self.system, self.system.negate_id(self.rid), -self.level)

    def to_dict(self) -> dict:
        return {"root": list(self.root), "level": self.level}

    def __repr__(self) -> str:
        return f"AffineRoot(({format_vector(self.root)}), {self.level})"


def affine_root(system: RootSystem, vec: Sequence[int], level: int) -> AffineRoot:
    return AffineRoot(system, system.root_id(vec), int(level))


@dataclass(frozen=True)
class AffineElement:
    """x = w t^μ（μ は単純コルート基底の整数ベクトル）"""

    w: WeylElement
    mu: Vector

    @property
    def system(self) -> RootSystem:
        return self.w.system

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        # (w t^μ)(w' t^μ') = ww' t^{w'⁻¹μ + μ'}
        shifted = other.w.inverse.act_coweight(self.mu)
        return AffineElement(self.w * other.w, tuple(a + b for a, b in zip(shifted, other.mu)))

    @cached_property
    def inverse(self) -> "AffineElement":
        # (w t^μ)⁻¹ = w⁻¹ t^{−wμ}
        return AffineElement(self.w.inverse, tuple(-c for c in self.w.act_coweight(self.mu)))

    @property
    def is_identity(self) -> bool:
        return self.w.is_identity and not any(self.mu)

    def act(self, a: AffineRoot) -> AffineRoot:
        # (w t^μ)(α, n) = (wα, n − <μ, α>)
        return AffineRoot(a.system, self.w.perm[a.rid], a.level - self.system.pair_id(self.mu, a.rid))

    def format(self) -> str:
        return f"{self.w.format()};{format_vector(self.mu)}"

    def __repr__(self) -> str:
        return f"AffineElement({self.format()})"


def translation(system: RootSystem, mu: Sequence[int]) -> AffineElement:
    return AffineElement(system.identity, system.check_vector(mu, "coweight"))


def affine_identity(system: RootSystem) -> AffineElement:
    return translation(system, (0,) * system.rank)


def parse_affine(system: RootSystem, text: str) -> AffineElement:
    """"s1 s2 s1;1,1" 形式"""
    if text is None or ";" not in text:
        raise DomainRejection("bad_affine_element", f"expected '<word>;<coweight>': {text}", token=text)
    word, mu = text.split(";", 1)
    return AffineElement(system.parse_word(word), system.parse_coweight(mu))


def affine_act(x: AffineElement, a: AffineRoot) -> AffineRoot:
    return x.act(a)


def affine_reflection(a: AffineRoot) -> AffineElement:
    """r_(α,n) = s_α t^{nα∨}"""
    system = a.system
    coroot = system.coroots[a.rid]
    return AffineElement(system.reflection(a.rid), tuple(a.level * c for c in coroot))


def functional_at(x: AffineElement, rid: int) -> int:
    system = x.system
    return system.pair_id(x.mu, rid) + positivity(system, rid) - positivity(system, x.w.perm[rid])


def length_functional(x: AffineElement, gamma: Sequence[int]) -> int:
    """ℓ(w t^μ, γ) = <μ, γ> + Φ⁺(γ) − Φ⁺(wγ)"""
    return functional_at(x, x.system.root_id(gamma))


def ell_u(x: AffineElement, u: WeylElement) -> int:
    """
    ℓ_u(x) を和の形と閉じた形の両方で計算し、一致を確認して返す

    和: Σ_{α>0} ℓ(x⁻¹, uα)
    閉形: <−u⁻¹wμ, 2ρ> − ℓ(u) + ℓ(w⁻¹u)
    """
    system = x.system
    xinv = x.inverse
    by_sum = sum(functional_at(xinv, u.perm[a]) for a in system.positive_ids)
    moved = u.inverse.act_coweight(x.w.act_coweight(x.mu))
    closed = (
        -system.pair(moved, system.two_rho)
        - u.length
        + (x.w.inverse * u).length
    )
    if by_sum != closed:
        raise ConsistencyError(
            "ell_u formulas disagree",
            {"x": x.format(), "u": u.format(), "sum": by_sum, "closed": closed},
        )
    return closed


def affine_length(x: AffineElement) -> int:
    """ℓ(x) = Σ_{α>0} |ℓ(x, α)|"""
    return sum(abs(functional_at(x, a)) for a in x.system.positive_ids)


def length_positive_set(x: AffineElement) -> List[WeylElement]:
    """LP(x) = {v : ℓ(x, vα) ≥ 0 ∀α>0}（(長さ, 語) 順）"""
    system = x.system
    return [
        v for v in system.elements()
        if all(functional_at(x, v.perm[a]) >= 0 for a in system.positive_ids)
    ]


def eta_shrunken(x: AffineElement) -> Optional[WeylElement]:
    """LP(x) = {v} のとき v⁻¹wv、それ以外は None"""
    lp = length_positive_set(x)
    if len(lp) != 1:
        return None
    v = lp[0]
    return v.inverse * x.w * v


def virtual_dimension(x: AffineElement, b) -> Optional[int]:
    """d_x(b) = ½(ℓ(x) + ℓ(η(x)) − <ν(b), 2ρ> − defect(b))。b は nu / defect を持つ"""
    eta = eta_shrunken(x)
    if eta is None:
        return None
    twice = affine_length(x) + eta.length - x.system.pair(b.nu, x.system.two_rho) - b.defect
    if twice % 2:
        raise ConsistencyError("virtual dimension is not integral", {"x": x.format(), "twice": twice})
    return twice // 2


def simple_affine_roots(system: RootSystem) -> List[AffineRoot]:
    """Δ_af = {(α_i, 0)} ∪ {(−θ, 1)}"""
    simple = [AffineRoot(system, i, 0) for i in range(system.rank)]
    theta = system.highest_root_id
    return simple + [AffineRoot(system, system.negate_id(theta), 1)]


def reduced_length_by_descents(x: AffineElement) -> int:
    """
    アフィンコクセター系での語長を降下で数える独立オラクル

    x(a) が負となる単純アフィンルート a について x ← x r_a を繰り返す。
    長さ 0 の元は恒等元のみ（コルート格子に限定しているため）。
    """
    steps = 0
    current = x
    simples = simple_affine_roots(x.system)
    reflections = [affine_reflection(a) for a in simples]
    while True:
        k = next((i for i, a in enumerate(simples) if not current.act(a).is_positive), None)
        if k is None:
            break
        current = current * reflections[k]
        steps += 1
    if not current.is_identity:
        raise ConsistencyError("descent loop stopped before the identity", {"x": x.format(), "rest": current.format()})
    return steps


def all_translations(system: RootSystem, bound: int) -> List[Vector]:
    """各座標が [−bound, bound] の μ を辞書順で列挙"""
    values: List[Tuple[int, ...]] = [()]
    for _ in range(system.rank):
        values = [v + (c,) for v in values for c in range(-bound, bound + 1)]
    return values
