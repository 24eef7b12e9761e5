# -*- coding: utf-8 -*-
"""
bruhat_system - アフィン・ドリーニュ＝ルスティック多様体解析モジュール
整数的 σ 共役類、E(u,v) 多重集合、e と d、非空性の判定、次元と既約成分数、
超放物性の検出、一般ニュートン点、コスタント分配関数による照合
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from core.affine import AffineElement, affine_length, functional_at, length_positive_set
from core.dbg import wts_multiset
from core.errors import ConsistencyError, DomainRejection
from core.qbg import qbg_distance_weight
from core.rootsys import RootSystem, Vector, WeylElement, format_vector
from infra.logger import logger


@dataclass(frozen=True)
class SigmaClassIntegral:
    """b = t^ν（ν は支配的）。分裂群なので defect は常に 0"""

    system: RootSystem = field(compare=False, repr=False)
    nu: Vector
    defect: int = 0

    @property
    def regular(self) -> bool:
        return self.system.is_regular(self.nu)

    def to_dict(self) -> Dict[str, Any]:
        return {"nu": list(self.nu), "defect": self.defect, "regular": self.regular}


def make_sigma_class(system: RootSystem, nu: Sequence[int]) -> SigmaClassIntegral:
    nu = system.check_vector(nu, "coweight")
    if not system.is_dominant(nu):
        lam, _ = system.dominant_rep(nu)
        raise DomainRejection(
            "not_dominant",
            f"Newton point must be dominant; the dominant representative is {format_vector(lam)}",
            nu=list(nu), dominant=list(lam),
        )
    return SigmaClassIntegral(system, nu)


def _c_times_two(c: Union[int, Fraction]) -> int:
    twice = Fraction(c) * 2
    if twice.denominator != 1:
        raise DomainRejection("bad_constant", f"C must be a multiple of 1/2: {c}", C=str(c))
    return int(twice)


def _witness_by_c2(x: AffineElement, J: Sequence[int], c2: int) -> Optional[WeylElement]:
    """C2 = 2C として (J, C)-超放物性の最短の証人 v を探す"""
    system = x.system
    inside = system.positive_ids_in(J)
    inside_set = set(inside)
    outside = [a for a in system.positive_ids if a not in inside_set]
    coset = system.parabolic_elements(J)
    for v in system.elements():
        if any(functional_at(x, v.perm[a]) != 0 for a in inside):
            continue
        # 2<μ, v'α> > C <2ρ∨, α> を 2 倍した整数比較
        if all(
            4 * system.pair_id(x.mu, (v * y).perm[a]) > c2 * system.height_check(a)
            for y in coset for a in outside
        ):
            return v
    return None


def _assert_lp_coset(x: AffineElement, J: Sequence[int], v: WeylElement) -> None:
    lp = set(length_positive_set(x))
    coset = {v * y for y in x.system.parabolic_elements(J)}
    if lp != coset:
        raise ConsistencyError(
            "length positive set differs from the superparabolic coset",
            {"x": x.format(), "J": [j + 1 for j in J], "witness": v.format()},
        )


def superparabolic_witness(x: AffineElement, J: Sequence[int],
                           C: Union[int, Fraction]) -> Optional[WeylElement]:
    """J は 0 始まりの単純ルート添字。C ≥ 2 で証人があれば LP(x) = vW_J を確かめる"""
    if C < 0:
        raise DomainRejection("bad_constant", f"C must be nonnegative: {C}", C=str(C))
    c2 = _c_times_two(C)
    J = sorted(set(J))
    v = _witness_by_c2(x, J, c2)
    if v is not None and c2 >= 4:
        _assert_lp_coset(x, J, v)
    return v


def _weight_for(x: AffineElement, b: SigmaClassIntegral, u: WeylElement) -> Vector:
    moved = u.inverse.act_coweight(x.mu)
    return tuple(a - c for a, c in zip(moved, b.nu))


def e_multiset(x: AffineElement, b: SigmaClassIntegral, u: WeylElement, v: WeylElement,
               lp: Optional[Sequence[WeylElement]] = None) -> List[int]:
    """E(u,v) = {e | (u⁻¹μ − ν, e) ∈ wts(u ⇒ wu ⇢ wv)}（昇順）"""
    lp = length_positive_set(x) if lp is None else lp
    if v not in lp:
        raise DomainRejection("not_length_positive", f"{v.format()} is not in LP({x.format()})",
                              v=v.format(), x=x.format())
    weight = _weight_for(x, b, u)
    if any(c < 0 for c in weight):
        return []
    return wts_multiset(u, x.w * u, x.w * v, [weight]).lengths(weight)


def _half(twice: int, what: str, detail: Dict[str, Any]) -> int:
    if twice % 2:
        raise ConsistencyError(f"{what} is not integral", dict(detail, twice=twice))
    return twice // 2


@dataclass
class Superparabolic:
    J: Tuple[int, ...]
    c_times_two: int
    witness: WeylElement

    def to_dict(self) -> Dict[str, Any]:
        return {"J": [j + 1 for j in self.J], "C_times_2": self.c_times_two, "witness": self.witness.format()}


@dataclass
class ADLVReport:
    x: AffineElement
    b: SigmaClassIntegral
    lp: List[WeylElement]
    table: Dict[Tuple[WeylElement, WeylElement], List[int]]
    e: Optional[int] = None
    d: Optional[int] = None
    verdict: str = "bounds_only"
    dimension: Optional[Dict[str, Any]] = None
    components: Optional[Dict[str, Any]] = None
    component_bound: Optional[int] = None
    superparabolic: Optional[Superparabolic] = None
    passing_J: List[Tuple[int, ...]] = field(default_factory=list)
    union: Optional[List[int]] = None

    @property
    def is_empty(self) -> bool:
        return self.verdict == "empty"

    def to_dict(self) -> Dict[str, Any]:
        out = {
            "x": self.x.format(),
            "b": self.b.to_dict(),
            "verdict": self.verdict,
            "e": self.e,
            "d": self.d,
            "dimension": self.dimension,
            "components": self.components,
            "superparabolic": None if self.superparabolic is None else self.superparabolic.to_dict(),
            "passing_J": [[j + 1 for j in J] for J in self.passing_J],
            "LP": [v.format() for v in self.lp],
            "E": [
                {"u": u.format(), "v": v.format(), "lengths": lengths}
                for (u, v), lengths in sorted(self.table.items(), key=lambda kv: (kv[0][0].sort_key, kv[0][1].sort_key))
            ],
        }
        if self.union is not None:
            out["E_union"] = self.union
        return out


def _mult(lengths: Sequence[int], e: int) -> int:
    return sum(1 for x in lengths if x == e)


def _search_superparabolic(x: AffineElement, c2: int) -> Tuple[Optional[Superparabolic], List[Tuple[int, ...]]]:
    """J を大きさ順・辞書順に調べ、最初の証人と通過した全ての J を返す"""
    system = x.system
    found: Optional[Superparabolic] = None
    passing: List[Tuple[int, ...]] = []
    for size in range(system.rank + 1):
        for J in combinations(range(system.rank), size):
            v = _witness_by_c2(x, J, c2)
            if v is None:
                continue
            passing.append(J)
            if found is None:
                if c2 >= 4:
                    _assert_lp_coset(x, J, v)
                found = Superparabolic(J, c2, v)
    return found, passing


def adlv_analyze(x: AffineElement, b: SigmaClassIntegral, threads: int = 1) -> ADLVReport:
    system = x.system
    lp = length_positive_set(x)
    pairs = [(u, v) for u in system.elements() for v in lp]
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        results = list(pool.map(lambda uv: e_multiset(x, b, uv[0], uv[1], lp), pairs))
    table = dict(zip(pairs, results))
    report = ADLVReport(x, b, lp, table)

    # e = max_u min_v max E(u,v)、max ∅ = −∞ は None
    per_u: List[Optional[int]] = []
    for u in system.elements():
        tops = [max(table[(u, v)]) if table[(u, v)] else None for v in lp]
        per_u.append(None if any(t is None for t in tops) else min(tops))
    finite = [t for t in per_u if t is not None]
    e = max(finite) if finite else None

    mu_dom, _ = system.dominant_rep(x.mu)
    c2 = 3 * system.pair(tuple(a - c for a, c in zip(mu_dom, b.nu)), system.two_rho)
    if c2 >= 0:
        report.superparabolic, report.passing_J = _search_superparabolic(x, c2)

    if report.superparabolic is not None:
        J = report.superparabolic.J
        w0J = system.longest_element(J)
        union: List[int] = []
        for v in lp:
            union.extend(table[(v * w0J, v)])
        report.union = sorted(union)
        top = max(union) if union else None
        if top != e:
            logger.warning(f"超放物的分岐の max(E) = {top} が e = {e} と一致しません: x={x.format()}")
        e = top

    report.e = e
    if e is None:
        report.verdict = "empty"
        logger.info(f"ADLV は空です: x={x.format()}, ν={format_vector(b.nu)}")
        return report

    detail = {"x": x.format(), "nu": list(b.nu), "e": e}
    report.d = _half(affine_length(x) + e - system.pair(b.nu, system.two_rho), "d", detail)
    bound = sum(min(_mult(table[(u, v)], e) for v in lp) for u in system.elements())
    report.component_bound = bound

    if report.superparabolic is not None:
        report.verdict = "nonempty_exact"
        report.dimension = {"kind": "exact", "value": report.d}
        if b.regular:
            report.components = {"kind": "exact", "value": _mult(report.union, e)}
        else:
            report.components = {"kind": "upper", "value": bound}
    else:
        report.verdict = "bounds_only"
        report.dimension = {"kind": "upper", "value": report.d}
        report.components = {"kind": "upper", "value": bound}
    logger.debug(f"ADLV 解析: x={x.format()}, verdict={report.verdict}, e={e}, d={report.d}")
    return report


def generic_newton_superregular(x: AffineElement) -> Optional[Vector]:
    """v⁻¹μ が支配的となる最短の v で ν = v⁻¹μ − wt(v ⇒ wv)。正則性の閾値を満たさなければ None"""
    system = x.system
    lam, v = system.dominant_rep(x.mu)
    _, wt = qbg_distance_weight(v, x.w * v)
    c2 = 3 * system.pair(wt, system.two_rho)
    if any(2 * system.pair(lam, system.roots[i]) < c2 for i in range(system.rank)):
        return None
    return tuple(a - c for a, c in zip(lam, wt))


def kostant_partition(system: RootSystem, lam: Sequence[int]) -> int:
    """λ を正コルートの非負整数結合で書く方法の数（箱 [0, λ] 上の動的計画法）"""
    lam = system.check_vector(lam, "coweight")
    if any(c < 0 for c in lam):
        return 0
    ways: Dict[Vector, int] = {pt: 0 for pt in product(*(range(c + 1) for c in lam))}
    ways[(0,) * system.rank] = 1
    for rid in system.positive_ids:
        coroot = system.coroots[rid]
        # 辞書順に走査すれば v − coroot は先に確定している
        for pt in sorted(ways):
            prev = tuple(a - c for a, c in zip(pt, coroot))
            if all(c >= 0 for c in prev):
                ways[pt] += ways[prev]
    return ways[lam]


@dataclass
class HyperspecialReport:
    mu: Vector
    nu: Vector
    kostant: int
    expected_dimension: int
    report: ADLVReport
    mismatches: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mu": list(self.mu),
            "nu": list(self.nu),
            "kostant": self.kostant,
            "expected_dimension": self.expected_dimension,
            "ok": self.ok,
            "mismatches": self.mismatches,
            "report": self.report.to_dict(),
        }


def hyperspecial_crosscheck(system: RootSystem, mu: Sequence[int], b: SigmaClassIntegral,
                            threads: int = 1) -> HyperspecialReport:
    """x = w₀t^μ について次元・非空性・成分数をコスタント分配関数と突き合わせる"""
    mu = system.check_vector(mu, "coweight")
    if not system.is_dominant(mu):
        raise DomainRejection("not_dominant", f"mu must be dominant: {format_vector(mu)}", mu=list(mu))
    diff = tuple(a - c for a, c in zip(mu, b.nu))
    c2 = 3 * system.pair(diff, system.two_rho)
    if any(2 * system.pair(mu, system.roots[i]) < c2 for i in range(system.rank)):
        raise DomainRejection("gate_failed", "mu is not regular enough for this class",
                              mu=list(mu), nu=list(b.nu), C_times_2=c2)
    x = AffineElement(system.w0, mu)
    report = adlv_analyze(x, b, threads)
    k = kostant_partition(system, diff)
    twice = system.pair(diff, system.two_rho)
    expected = _half(twice, "hyperspecial dimension", {"mu": list(mu), "nu": list(b.nu)}) + system.num_positive
    out = HyperspecialReport(mu, b.nu, k, expected, report)
    nonempty = not report.is_empty
    if nonempty != (k > 0):
        out.mismatches.append({"check": "nonempty", "kostant": k, "verdict": report.verdict})
    if nonempty:
        if report.dimension is None or report.dimension["value"] != expected:
            out.mismatches.append({"check": "dimension", "expected": expected, "got": report.dimension})
        if report.components is None or report.components["value"] != k:
            out.mismatches.append({"check": "components", "expected": k, "got": report.components})
        if report.e != system.num_positive:
            out.mismatches.append({"check": "e", "expected": system.num_positive, "got": report.e})
    for m in out.mismatches:
        logger.warning(f"超特殊照合の不一致: {m}")
    return out
