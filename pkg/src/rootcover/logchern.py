"""Intersection data of a base pair (Z, D) and its logarithmic Chern numbers.

A base pair is a smooth projective 3-fold Z together with branch divisors
D_1, ..., D_r whose reduced sum is simple normal crossing, represented purely
by numbers: Chern numbers of Z, all divisor products up to degree three,
curve genera of the pairwise intersections, and the Euler characteristics of
D and Sing(D).  The log Chern numbers of the pair are the Chern numbers of
the log-differential sheaf; for 3-folds,

    c1_bar^3   = (c1 - D)^3,
    c1c2_bar   = c1c2 - D(c1^2 + c2) + c1(2 D^[2] + 3 D^[1,1]) - D(D^[2] + D^[1,1]),
    c3_bar     = c3 - c2 D + c1(D^[2] + D^[1,1]) - (D^[3] + D^[1,2] + D^[2,1] + D^[1,1,1]),

where D^[i_1,...,i_m] = sum_{j_1<...<j_m} D_{j_1}^{i_1} ... D_{j_m}^{i_m} and
D = D_red.  Note the cube is the honest trinomial expansion: the degree-three
divisor groups enter with minus signs.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import BadParams, BadSignature, NotDisjoint

__all__ = [
    "TripleTable",
    "BasePair",
    "LogChernNumbers",
    "bracket",
    "log_chern_numbers",
    "nonsingular_cover_chern",
    "make_preset",
    "base_pair_to_json",
    "base_pair_from_json",
]


@dataclass(frozen=True)
class TripleTable:
    """Symmetric triple products D_j D_k D_l (j < k < l).

    Either one constant value for every triple (the uniform arrangements) or
    an explicit sparse map; both forms appear in the JSON schema.
    """

    r: int
    constant: Optional[int] = None
    entries: dict = field(default_factory=dict)  # {(j,k,l): value}, j<k<l

    def get(self, j: int, k: int, l: int) -> int:
        key = tuple(sorted((j, k, l)))
        if len(set(key)) != 3:
            raise BadParams(f"triple indices must be distinct, got {key}")
        if self.constant is not None:
            return self.constant
        return self.entries.get(key, 0)

    def items_nonzero(self):
        if self.constant is not None:
            if self.constant != 0:
                for j in range(self.r):
                    for k in range(j + 1, self.r):
                        for l in range(k + 1, self.r):
                            yield (j, k, l), self.constant
            return
        for key in sorted(self.entries):
            if self.entries[key]:
                yield key, self.entries[key]

    def total(self) -> int:
        if self.constant is not None:
            return self.constant * math.comb(self.r, 3)
        return sum(self.entries.values())

    def is_zero(self) -> bool:
        if self.constant is not None:
            return self.constant == 0 or self.r < 3
        return all(v == 0 for v in self.entries.values())


@dataclass(frozen=True)
class BasePair:
    """All intersection-theoretic data of (Z, D) the invariants consume.

    Tables are indexed from 0.  ``c1_dd[j][k]`` is c1.D_j D_k (the diagonal is
    c1.D_j^2); ``dd2[j][k]`` is D_j.D_k^2, ordered.  ``pair_curves[(j,k)]``
    lists (genus, component count) for the components of the curve D_j.D_k.
    ``h_section`` marks pairs whose divisors are all linearly equivalent to a
    single class H, so multiplicities must satisfy sum(nu) ~ 0 mod n.
    """

    r: int
    c1_cubed: int
    c1c2: int
    c3: int
    d3: tuple[int, ...]
    c1sq_d: tuple[int, ...]
    c2_d: tuple[int, ...]
    c1_dd: tuple[tuple[int, ...], ...]
    dd2: tuple[tuple[int, ...], ...]
    triple: TripleTable
    pair_curves: dict  # {(j,k): ((genus, count), ...)}, j < k
    e_d: int
    e_sing_d: int
    label: str = "custom"
    h_section: bool = False

    def __post_init__(self):
        r = self.r
        for name in ("d3", "c1sq_d", "c2_d"):
            if len(getattr(self, name)) != r:
                raise BadParams(f"table {name} must have length {r}")
        for j in range(r):
            for k in range(r):
                if self.c1_dd[j][k] != self.c1_dd[k][j]:
                    raise BadParams("c1_dd must be symmetric")
        for j in range(r):
            for k in range(j + 1, r):
                crossing = self.dd2[j][k] or self.dd2[k][j] or any(
                    self.triple.get(j, k, l) for l in range(r) if l not in (j, k)
                )
                if crossing and not self.pair_curves.get((j, k)):
                    raise BadParams(
                        f"divisors {j}, {k} cross but pair_curves[({j},{k})] is empty"
                    )

    @property
    def chi(self) -> Fraction:
        """Analytic Euler characteristic of Z: c1c2/24."""
        return Fraction(self.c1c2, 24)

    def kz_dd(self, j: int, k: int) -> int:
        """K_Z . D_j D_k = -c1 . D_j D_k."""
        return -self.c1_dd[j][k]

    # aggregate divisor sums used by the closed forms
    def sum_d3(self) -> int:
        return sum(self.d3)

    def sum_12(self) -> int:
        """D^[1,2] = sum_{j<k} D_j D_k^2."""
        return sum(self.dd2[j][k] for j in range(self.r) for k in range(j + 1, self.r))

    def sum_21(self) -> int:
        """D^[2,1] = sum_{j<k} D_j^2 D_k."""
        return sum(self.dd2[k][j] for j in range(self.r) for k in range(j + 1, self.r))

    def c1_d2(self) -> int:
        """c1 . D^[2]."""
        return sum(self.c1_dd[j][j] for j in range(self.r))

    def c1_d11(self) -> int:
        """c1 . D^[1,1]."""
        return sum(self.c1_dd[j][k] for j in range(self.r) for k in range(j + 1, self.r))

    def c1sq_dred(self) -> int:
        return sum(self.c1sq_d)

    def c2_dred(self) -> int:
        return sum(self.c2_d)

    def pair_meets(self, j: int, k: int) -> bool:
        """Whether the divisors D_j, D_k have any nonzero product."""
        if self.c1_dd[j][k] or self.dd2[j][k] or self.dd2[k][j]:
            return True
        return any(
            self.triple.get(j, k, l) for l in range(self.r) if l not in (j, k)
        )


@dataclass(frozen=True)
class LogChernNumbers:
    c1_cubed_bar: Fraction
    c1c2_bar: Fraction
    c3_bar: Fraction


_WEIGHT_DEGREE = {"one": 0, "c1": 1, "c2": 2, "c1^2": 2, "c1^3": 3, "c1c2": 3, "c3": 3}


def bracket(pair: BasePair, signature, weight: str = "one") -> Fraction:
    """Degree-3 pairing of D^[signature] against an ambient Chern class.

    ``signature`` is a list of positive integers (or [0]); its total plus the
    weight's cohomological degree must be 3.  Examples: ([2], "c1") gives
    c1 . sum D_j^2; ([0], "c1c2") is the ambient Chern number itself.
    """
    if weight not in _WEIGHT_DEGREE:
        raise BadSignature(f"unknown weight {weight!r}")
    signature = list(signature)
    if signature == [0]:
        total = 0
    elif signature and all(isinstance(i, int) and i >= 1 for i in signature):
        total = sum(signature)
    else:
        raise BadSignature(f"invalid signature {signature}")
    if total + _WEIGHT_DEGREE[weight] != 3:
        raise BadSignature(
            f"signature {signature} with weight {weight!r} is not degree 3"
        )
    r = pair.r
    if total == 0:
        return Fraction(
            {"c1^3": pair.c1_cubed, "c1c2": pair.c1c2, "c3": pair.c3}[weight]
        )
    if signature == [3]:
        return Fraction(pair.sum_d3())
    if signature == [2]:
        return Fraction(pair.c1_d2())
    if signature == [1]:
        return Fraction(pair.c1sq_dred() if weight == "c1^2" else pair.c2_dred())
    if signature == [1, 1]:
        return Fraction(pair.c1_d11())
    if signature == [1, 2]:
        return Fraction(pair.sum_12())
    if signature == [2, 1]:
        return Fraction(pair.sum_21())
    if signature == [1, 1, 1]:
        return Fraction(pair.triple.total())
    raise BadSignature(f"unsupported signature {signature}")


def log_chern_numbers(pair: BasePair) -> LogChernNumbers:
    """The three log Chern numbers of the pair."""
    s3, s12, s21 = pair.sum_d3(), pair.sum_12(), pair.sum_21()
    s111 = pair.triple.total()
    c1_d2, c1_d11 = pair.c1_d2(), pair.c1_d11()
    c1sq_d, c2_d = pair.c1sq_dred(), pair.c2_dred()

    dred_cubed = s3 + 3 * (s12 + s21) + 6 * s111
    dred_d2 = s3 + s12 + s21          # D_red . D^[2]
    dred_d11 = s12 + s21 + 3 * s111   # D_red . D^[1,1]

    c1_cubed_bar = (
        pair.c1_cubed - 3 * c1sq_d + 3 * (c1_d2 + 2 * c1_d11) - dred_cubed
    )
    c1c2_bar = (
        pair.c1c2 - (c1sq_d + c2_d) + (2 * c1_d2 + 3 * c1_d11) - (dred_d2 + dred_d11)
    )
    c3_bar = pair.c3 - c2_d + (c1_d2 + c1_d11) - (s3 + s12 + s21 + s111)
    return LogChernNumbers(Fraction(c1_cubed_bar), Fraction(c1c2_bar), Fraction(c3_bar))


def nonsingular_cover_chern(pair: BasePair, n: int) -> tuple[Fraction, Fraction, Fraction]:
    """Chern numbers (c1^3, c1c2, c3) of the smooth degree-n cover of (Z, D).

    Requires pairwise-disjoint non-singular branch divisors (all cross
    products zero).  Each Chern class of the cover pulls back as
    c_e = c_e_bar + D^[1] c_{e-1}_bar / n, so the degree-3 numbers are exact
    polynomials in 1/n times the covering degree.
    """
    for j in range(pair.r):
        for k in range(pair.r):
            if j != k and (pair.c1_dd[j][k] or pair.dd2[j][k]):
                raise NotDisjoint(f"divisors {j}, {k} have nonzero products")
    if not pair.triple.is_zero():
        raise NotDisjoint("triple products present")

    d3 = Fraction(pair.sum_d3())
    c1_d2 = Fraction(pair.c1_d2())
    c1sq_d = Fraction(pair.c1sq_dred())
    c2_d = Fraction(pair.c2_dred())

    bars = log_chern_numbers(pair)
    c1b_sq_d = c1sq_d - 2 * c1_d2 + d3       # (c1 - D)^2 . D
    c1b_d2 = c1_d2 - d3                      # (c1 - D) . D^2
    c2b_d = c2_d - c1_d2 + d3                # c2_bar . D

    c1_cubed = n * (
        bars.c1_cubed_bar
        + 3 * c1b_sq_d / n
        + 3 * c1b_d2 / (n * n)
        + d3 / (n**3)
    )
    c1c2 = n * (
        bars.c1c2_bar + (c1b_sq_d + c2b_d) / n + c1b_d2 / (n * n)
    )
    c3 = n * (bars.c3_bar + c2b_d / n)
    return c1_cubed, c1c2, c3


def _hypersurface_tables(d: int, r: int) -> BasePair:
    genus = (d - 1) * (d - 2) // 2
    e_surface = d**3 - 4 * d * d + 6 * d
    e_curve = 3 * d - d * d  # 2 - 2*genus
    c1h2 = (5 - d) * d
    pair_curves = {
        (j, k): ((genus, 1),) for j in range(r) for k in range(j + 1, r)
    }
    return BasePair(
        r=r,
        c1_cubed=(5 - d) ** 3 * d,
        c1c2=(5 - d) * (10 + d * (d - 5)) * d,
        c3=-d * (d * d * (d - 5) + 10 * d - 10),
        d3=(d,) * r,
        c1sq_d=((5 - d) ** 2 * d,) * r,
        c2_d=((10 + d * (d - 5)) * d,) * r,
        c1_dd=tuple((c1h2,) * r for _ in range(r)),
        dd2=tuple((d,) * r for _ in range(r)),
        triple=TripleTable(r=r, constant=d),
        pair_curves=pair_curves,
        e_d=r * e_surface - math.comb(r, 2) * e_curve + math.comb(r, 3) * d,
        e_sing_d=math.comb(r, 2) * e_curve - 2 * d * math.comb(r, 3),
        label=f"hypersurface_p4(d={d}, r={r})" if d > 1 else f"planes_p3(r={r})",
        h_section=True,
    )


def make_preset(kind: str, params) -> BasePair:
    """Preset base pairs.

    ``planes_p3`` with params r: r planes in general position in P^3.
    ``hypersurface_p4`` with params (d, r): a smooth degree-d 3-fold in P^4
    with r general hyperplane sections (d = 1 recovers the planes preset).
    """
    if kind == "planes_p3":
        r = params if isinstance(params, int) else params[0]
        if r < 1:
            raise BadParams(f"need r >= 1, got {r}")
        return _hypersurface_tables(1, r)
    if kind == "hypersurface_p4":
        try:
            d, r = params
        except (TypeError, ValueError):
            raise BadParams("hypersurface_p4 takes params (d, r)") from None
        if d < 1 or r < 1:
            raise BadParams(f"need d >= 1 and r >= 1, got ({d}, {r})")
        return _hypersurface_tables(d, r)
    raise BadParams(f"unknown preset kind {kind!r}")


def base_pair_to_json(pair: BasePair) -> str:
    """Versioned JSON of the full intersection data."""
    triple: dict
    if pair.triple.constant is not None:
        triple = {"constant": pair.triple.constant}
    else:
        triple = {
            "entries": [[j, k, l, v] for (j, k, l), v in sorted(pair.triple.entries.items())]
        }
    doc = {
        "schema": "rootcover-basepair/1",
        "label": pair.label,
        "h_section": pair.h_section,
        "r": pair.r,
        "c1_cubed": pair.c1_cubed,
        "c1c2": pair.c1c2,
        "c3": pair.c3,
        "d3": list(pair.d3),
        "c1sq_d": list(pair.c1sq_d),
        "c2_d": list(pair.c2_d),
        "c1_dd": [list(row) for row in pair.c1_dd],
        "dd2": [list(row) for row in pair.dd2],
        "triple": triple,
        "pair_curves": [
            [j, k, [[g, c] for g, c in curves]]
            for (j, k), curves in sorted(pair.pair_curves.items())
        ],
        "e_d": pair.e_d,
        "e_sing_d": pair.e_sing_d,
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def base_pair_from_json(text: str) -> BasePair:
    doc = json.loads(text)
    if doc.get("schema") != "rootcover-basepair/1":
        raise BadParams(f"unsupported schema {doc.get('schema')!r}")
    r = doc["r"]
    tdoc = doc["triple"]
    if "constant" in tdoc:
        triple = TripleTable(r=r, constant=tdoc["constant"])
    else:
        entries = {tuple(e[:3]): e[3] for e in tdoc["entries"]}
        triple = TripleTable(r=r, entries=entries)
    return BasePair(
        r=r,
        c1_cubed=doc["c1_cubed"],
        c1c2=doc["c1c2"],
        c3=doc["c3"],
        d3=tuple(doc["d3"]),
        c1sq_d=tuple(doc["c1sq_d"]),
        c2_d=tuple(doc["c2_d"]),
        c1_dd=tuple(tuple(row) for row in doc["c1_dd"]),
        dd2=tuple(tuple(row) for row in doc["dd2"]),
        triple=triple,
        pair_curves={
            (j, k): tuple((g, c) for g, c in curves)
            for j, k, curves in doc["pair_curves"]
        },
        e_d=doc["e_d"],
        e_sing_d=doc["e_sing_d"],
        label=doc.get("label", "custom"),
        h_section=doc.get("h_section", False),
    )
