"""Destabilizing one-parameter subgroups, stratum weight data, and
Teleman-quantization vanishing certificates.

Each unstable Harder-Narasimhan stratum carries a canonical (virtual)
one-parameter subgroup whose weights at a vertex are a common rescaling
of the part slopes, repeated according to the part dimensions.  The
threshold eta is the weight of the determinant of the conormal bundle
of the stratum.  A descended bundle whose weights on every stratum stay
strictly below eta has vanishing higher cohomology on the quotient.

All weights are integers; strictness is the integer condition
margin = eta - max_weight >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

from .bundles import BundleExpr, StratumWeights, weights_of
from .quiver import HNType, Quiver, enumerate_hn_types, slope


@dataclass(frozen=True)
class OnePS:
    """Per-vertex weight blocks ((weight, multiplicity), ...), weights
    strictly decreasing within a vertex."""

    blocks: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self):
        for vertex in self.blocks:
            ws = [w for w, _ in vertex]
            if any(a <= b for a, b in zip(ws, ws[1:])):
                raise ValueError("block weights must strictly decrease")
            if any(m <= 0 for _, m in vertex):
                raise ValueError("block multiplicities must be positive")

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(sum(m for _, m in vertex) for vertex in self.blocks)

    def trace(self, i: int) -> int:
        return sum(w * m for w, m in self.blocks[i])

    def scaled(self, n: int) -> "OnePS":
        if n <= 0:
            raise ValueError("scale factor must be positive")
        return OnePS(tuple(tuple((w * n, m) for w, m in v) for v in self.blocks))


def one_ps_from_hn(tau: HNType, theta) -> OnePS:
    """The stratum's one-parameter subgroup: weights N * slope(part), with
    N the least positive integer clearing all slope denominators (no
    further gcd reduction); multiplicities are the part dimensions."""
    slopes = [slope(theta, part) for part in tau]
    scale = lcm(*(mu.denominator for mu in slopes)) if slopes else 1
    weights = [int(mu * scale) for mu in slopes]
    vertex_count = len(tau[0])
    blocks = []
    for i in range(vertex_count):
        blocks.append(tuple((w, part[i]) for w, part in zip(weights, tau) if part[i] > 0))
    return OnePS(tuple(blocks))


def eta(quiver: Quiver, s: OnePS) -> int:
    """Weight of det of the conormal bundle of the stratum: the negative
    weight total inside the gauge group minus the one in the
    representation space."""
    neg_r = 0
    for i, j in quiver.arrows:
        for ws, ms in s.blocks[i]:
            for wt, mt in s.blocks[j]:
                if wt - ws < 0:
                    neg_r += (wt - ws) * ms * mt
    neg_g = 0
    for vertex in s.blocks:
        for ws, ms in vertex:
            for wt, mt in vertex:
                if wt - ws < 0:
                    neg_g += (wt - ws) * ms * mt
    return neg_g - neg_r


def count_negative_directions(quiver: Quiver, s: OnePS) -> tuple[int, int]:
    """Counts (not weight totals) of strictly negative weight directions in
    the representation space and in the gauge Lie algebra."""
    neg_r = 0
    for i, j in quiver.arrows:
        for ws, ms in s.blocks[i]:
            for wt, mt in s.blocks[j]:
                if wt - ws < 0:
                    neg_r += ms * mt
    neg_g = 0
    for vertex in s.blocks:
        for ws, ms in vertex:
            for wt, mt in vertex:
                if wt - ws < 0:
                    neg_g += ms * mt
    return neg_r, neg_g


def descent_shift(s: OnePS, twist) -> int:
    """Additive weight twist making the universal bundles descend:
    sum_j a_j * trace(lambda_j) for the twist vector a."""
    if len(twist) != len(s.blocks):
        raise ValueError("twist vector has wrong length")
    return sum(a * s.trace(i) for i, a in enumerate(twist))


def universal_weights(s: OnePS, twist) -> tuple[tuple[int, ...], ...]:
    """Weight multisets of the descended universal bundles, one per vertex:
    raw block weights plus the descent shift.

    The twist must be unimodular against the dimension vector; with the
    additive shift convention used here the descended bundles have
    central weight zero exactly when twist . d = -1, which is the
    normalization satisfied by the working twist (1, -1) against (2, 3).
    """
    d = s.dim_vector()
    if sum(a * n for a, n in zip(twist, d)) != -1:
        raise ValueError("twist . d must be -1 for descent")
    shift = descent_shift(s, twist)
    out = []
    for vertex in s.blocks:
        ws: list[int] = []
        for w, m in vertex:
            ws.extend([w + shift] * m)
        out.append(tuple(ws))
    return tuple(out)


@dataclass(frozen=True)
class Moduli:
    """A quiver moduli setup: quiver, dimension vector, stability
    parameter theta with theta . d = 0, and a unimodular
    universal-bundle twist a (normalized so a . d = -1, the sign that
    makes the additive-shift descent convention central-weight free)."""

    quiver: Quiver
    dim: tuple[int, ...]
    theta: tuple[int, ...]
    twist: tuple[int, ...]

    def __post_init__(self):
        d = self.quiver.check_dim(self.dim)
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "theta", tuple(int(t) for t in self.theta))
        object.__setattr__(self, "twist", tuple(int(a) for a in self.twist))
        if len(self.theta) != len(d) or len(self.twist) != len(d):
            raise ValueError("parameter length mismatch")
        if sum(t * x for t, x in zip(self.theta, d)) != 0:
            raise ValueError("theta . d must be 0")
        if sum(a * x for a, x in zip(self.twist, d)) != -1:
            raise ValueError("twist . d must be -1 for descent")

    @classmethod
    def kronecker23(cls) -> "Moduli":
        return cls(Quiver.kronecker(3), (2, 3), (3, -2), (1, -1))


@dataclass(frozen=True)
class StratumData:
    hn_type: HNType
    one_ps: OnePS
    eta: int
    shift: int
    weights: tuple[tuple[int, ...], ...]

    def base(self) -> StratumWeights:
        return StratumWeights(self.weights[0], self.weights[1])


@lru_cache(maxsize=None)
def unstable_strata(moduli: Moduli) -> tuple[StratumData, ...]:
    """Stratum data for every unstable Harder-Narasimhan type, in the
    enumeration order of the types."""
    out = []
    for tau in enumerate_hn_types(moduli.quiver, moduli.dim, moduli.theta):
        if len(tau) == 1:
            continue
        s = one_ps_from_hn(tau, moduli.theta)
        out.append(
            StratumData(
                hn_type=tau,
                one_ps=s,
                eta=eta(moduli.quiver, s),
                shift=descent_shift(s, moduli.twist),
                weights=universal_weights(s, moduli.twist),
            )
        )
    return tuple(out)


@dataclass(frozen=True)
class StratumCheck:
    hn_type: HNType
    eta: int
    max_weight: int | None
    margin: int | None
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "hn_type": [list(p) for p in self.hn_type],
            "eta": self.eta,
            "max_weight": self.max_weight,
            "margin": self.margin,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class TelemanReport:
    expression: str
    strata: tuple[StratumCheck, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.strata)

    def to_json_dict(self) -> dict:
        return {
            "expression": self.expression,
            "strata": [row.to_json_dict() for row in self.strata],
            "pass": self.passed,
        }


def teleman_certify(expr: BundleExpr, moduli: Moduli | None = None) -> TelemanReport:
    """Vanishing certificate for the higher cohomology of a descended
    bundle: pass means every stratum weight is strictly below eta.

    A failed certificate is only "not certified"; the criterion is
    one-sided and says nothing about nonvanishing.
    """
    if moduli is None:
        moduli = Moduli.kronecker23()
    if moduli.quiver.vertex_count != 2:
        raise ValueError("bundle expressions assume a two-vertex quiver")

    # Central character check against the all-ones subgroup with the same
    # shift rule; a nonzero weight there would obstruct descent.
    ones = OnePS(tuple(((1, n),) if n > 0 else () for n in moduli.dim))
    central = StratumWeights(*universal_weights(ones, moduli.twist))
    if any(w != 0 for w in weights_of(expr, central)):
        raise ValueError(f"descent violation: {expr} has nonzero central weight")

    rows = []
    for stratum in unstable_strata(moduli):
        ws = weights_of(expr, stratum.base())
        if ws:
            mw = max(ws)
            margin = stratum.eta - mw
            passed = margin >= 1
        else:
            # the zero bundle: no weights to bound, vacuously certified
            mw, margin, passed = None, None, True
        rows.append(
            StratumCheck(
                hn_type=stratum.hn_type,
                eta=stratum.eta,
                max_weight=mw,
                margin=margin,
                passed=passed,
            )
        )
    return TelemanReport(expression=str(expr), strata=tuple(rows))
