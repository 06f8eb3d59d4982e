"""Hexagram ("Magic Star") projection of a root system onto an a2 plane.

Pick two equal-length roots at 120 degrees, project every root to its pair
of coroot pairings against them, and bucket: the six a2 roots form the
hexagon, weight (0,0) is the center, and the six outer weights are the tips.
A candidate pair is accepted only if the whole chart comes out legal, so the
selection needs no case analysis for the two root lengths.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .linalg import rat_str
from .roots import AlgebraLabel, RootSystem, Vector

Weight = Tuple[int, int]

HEX_WEIGHTS = ((2, -1), (-2, 1), (-1, 2), (1, -2), (1, 1), (-1, -1))
TIP_WEIGHTS = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1))
CENTER: Weight = (0, 0)
LEGAL = frozenset(HEX_WEIGHTS) | frozenset(TIP_WEIGHTS) | {CENTER}

STAR_HOSTS = {"G2", "F4", "E6", "E7", "E8", "D4"}


class MagicStarError(ValueError):
    pass


@dataclass(frozen=True)
class A2Choice:
    alpha: Vector
    beta: Vector
    a2_roots: Tuple[Vector, ...]
    candidates_validated: int


@dataclass(frozen=True)
class MagicStarChart:
    host: AlgebraLabel
    choice: A2Choice
    buckets: Dict[Weight, Tuple[Vector, ...]]

    def bucket_label(self, w: Weight) -> str:
        if w == CENTER:
            return "center"
        if w in HEX_WEIGHTS:
            return "hexagon"
        return "tip(%d,%d)" % w


def _pairing_columns(rs: RootSystem) -> List[List[int]]:
    """cols[j][i] = coroot pairing of root i against root j."""
    n = len(rs.roots)
    norms = [rs.norm2_scaled(j) for j in range(n)]
    scaled = rs.scaled
    cols: List[List[int]] = []
    for j in range(n):
        sj = scaled[j]
        nj = norms[j]
        col = []
        for i in range(n):
            si = scaled[i]
            num = 2 * sum(a * b for a, b in zip(si, sj))
            col.append(num // nj)
        cols.append(col)
    return cols


def _valid_counter(counter: Counter) -> bool:
    if not set(counter) <= LEGAL:
        return False
    if any(counter.get(h, 0) != 1 for h in HEX_WEIGHTS):
        return False
    tips = [counter.get(t, 0) for t in TIP_WEIGHTS]
    return len(set(tips)) == 1


def find_a2(rs: RootSystem) -> A2Choice:
    """Scan ordered root pairs at 120 degrees with equal length; keep the
    first pair whose projection buckets are legal with six equal tips.

    The number of candidates that validate is recorded on the result.
    """
    if str(rs.label) not in STAR_HOSTS:
        raise MagicStarError("host %s has no hexagram projection" % rs.label)
    n = len(rs.roots)
    cols = _pairing_columns(rs)
    norms = [rs.norm2_scaled(i) for i in range(n)]
    validated = 0
    first: Optional[Tuple[int, int]] = None
    for i in range(n):
        coli = cols[i]
        ni = norms[i]
        for j in range(n):
            if i == j or norms[j] != ni:
                continue
            if coli[j] != -1 or cols[j][i] != -1:
                continue
            counter = Counter(zip(coli, cols[j]))
            if _valid_counter(counter):
                validated += 1
                if first is None:
                    first = (i, j)
    if first is None:
        raise MagicStarError("no valid a2 pair found in %s" % rs.label)
    i, j = first
    alpha, beta = rs.roots[i], rs.roots[j]
    rootset = set(rs.roots)
    six = []
    for ca, cb in ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1)):
        v = tuple(ca * a + cb * b for a, b in zip(alpha, beta))
        if v not in rootset:
            raise MagicStarError("a2 combination escaped the root set")
        six.append(v)
    return A2Choice(alpha, beta, tuple(six), validated)


def project(rs: RootSystem, choice: A2Choice) -> MagicStarChart:
    """Bucket every root by its weight pair against (alpha, beta)."""
    ai = rs.index[choice.alpha]
    bi = rs.index[choice.beta]
    a2set = set(choice.a2_roots)
    buckets: Dict[Weight, List[Vector]] = {}
    for gi, root in enumerate(rs.roots):
        w = (rs.pairing_by_index(gi, ai), rs.pairing_by_index(gi, bi))
        if root in a2set:
            if w not in HEX_WEIGHTS:
                raise MagicStarError("a2 root fell outside the hexagon")
        elif w != CENTER and w not in TIP_WEIGHTS:
            raise MagicStarError("weight %r outside the legal set" % (w,))
        buckets.setdefault(w, []).append(root)
    tips = [len(buckets.get(t, ())) for t in TIP_WEIGHTS]
    if len(set(tips)) != 1:
        raise MagicStarError("tips are not balanced")
    # center roots must close among themselves under reflection
    center = buckets.get(CENTER, [])
    cset = set(center)
    for g in center:
        for a in center:
            c = rs.pairing_by_index(rs.index[g], rs.index[a])
            refl = tuple(x - c * y for x, y in zip(g, a))
            if refl not in cset:
                raise MagicStarError("center bucket is not a closed subsystem")
    frozen = {w: tuple(lst) for w, lst in buckets.items()}
    return MagicStarChart(rs.label, choice, frozen)


def chart_counts(chart: MagicStarChart) -> dict:
    """Exact cardinalities: center, hexagon total, and the six tip sizes."""
    center = len(chart.buckets.get(CENTER, ()))
    hexagon = sum(len(chart.buckets.get(h, ())) for h in HEX_WEIGHTS)
    tips = [len(chart.buckets.get(t, ())) for t in sorted(TIP_WEIGHTS)]
    return {"center": center, "hexagon": hexagon, "tips": tips}


def emit_chart(chart: MagicStarChart, format: str) -> str:
    if format == "csv":
        return _emit_csv(chart)
    if format == "svg":
        return _emit_svg(chart)
    raise ValueError("format must be csv or svg")


def _emit_csv(chart: MagicStarChart) -> str:
    lines = []
    for w in sorted(chart.buckets):
        for root in chart.buckets[w]:
            coords = ",".join(rat_str(x) for x in root)
            lines.append("%s;%d;%d;%s" % (coords, w[0], w[1], chart.bucket_label(w)))
    return "\n".join(lines) + "\n"


# Drawing plane: simple a2 roots at 120 degrees, fundamental weights dual to
# their coroots; a weight (a, b) sits at a*w1 + b*w2.
_SQRT3 = 3 ** 0.5
_W1 = (0.5, _SQRT3 / 6.0)
_W2 = (0.0, _SQRT3 / 3.0)


def _fmt(x: float) -> str:
    return "%.12g" % x


def _emit_svg(chart: MagicStarChart, guides: bool = True) -> str:
    scale = 220.0
    cx = cy = 300.0

    def pos(w: Weight) -> Tuple[float, float]:
        x = w[0] * _W1[0] + w[1] * _W2[0]
        y = w[0] * _W1[1] + w[1] * _W2[1]
        return (cx + scale * x, cy - scale * y)

    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 600 600" '
        'width="600" height="600">',
        '<rect width="600" height="600" fill="white"/>',
    ]
    if guides:
        tri1 = [(1, 0), (-1, 1), (0, -1)]
        tri2 = [(-1, 0), (1, -1), (0, 1)]
        for tri in (tri1, tri2):
            pts = " ".join("%s,%s" % (_fmt(x), _fmt(y)) for x, y in (pos(w) for w in tri))
            parts.append(
                '<polygon points="%s" fill="none" stroke="#cccccc" stroke-width="1"/>' % pts
            )
    for w in sorted(chart.buckets):
        x, y = pos(w)
        mult = len(chart.buckets[w])
        parts.append(
            '<circle cx="%s" cy="%s" r="6" fill="black"/>' % (_fmt(x), _fmt(y))
        )
        parts.append(
            '<text x="%s" y="%s" font-size="14" text-anchor="middle">%d</text>'
            % (_fmt(x), _fmt(y - 10.0), mult)
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
