"""Real monomial gamma-matrix representations in arbitrary signature.

Generators are built from small bases by three moves that keep every matrix
a signed permutation:

* doubling (p,q) -> (p+1,q+1): old gammas tensor a diagonal sign, plus two
  fresh 2x2 generators;
* flipping a block of four same-sign generators through their 4-volume,
  which moves the signature by (+-4, -+4);
* adjoining the total volume element when one extra generator of the right
  square is needed (odd total dimension).

Bases cover the real matrix types (p-q = 0,1,2,7 mod 8) and the quaternionic
type 4 and 6 mod 8 (quaternion left-multiplications are signed permutations).
The remaining classes 3 and 5 mod 8 have no representation here: their
minimal representations carry an invariant complex structure, and the
constructor refuses them by name.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import List, Optional, Sequence, Tuple

from .linalg import MonomialMatrix, dot, kron, mat_mul, mat_prod


class CliffordConstructionError(ValueError):
    pass


class CliffordNoBilinearError(ValueError):
    pass


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise ValueError("signature needs p >= 0, q >= 0, p + q >= 1")

    @property
    def total(self) -> int:
        return self.p + self.q

    def __str__(self) -> str:
        return "(%d,%d)" % (self.p, self.q)


@dataclass(frozen=True)
class CliffordRep:
    sig: Signature
    dim: int
    gammas: Tuple[MonomialMatrix, ...]
    metric: Tuple[int, ...]  # +1 for the first p generators, then -1

    def gamma(self, mu: int) -> MonomialMatrix:
        return self.gammas[mu]


@dataclass(frozen=True)
class BilinearForm:
    C: MonomialMatrix
    symmetry: int
    transpose_sign: int


@dataclass(frozen=True)
class RealityClass:
    name: str
    chiral: bool


SIGMA1 = MonomialMatrix(2, (1, 0), (1, 1))
SIGMA3 = MonomialMatrix(2, (0, 1), (1, -1))
EPS = MonomialMatrix(2, (1, 0), (1, -1))

# quaternion left-multiplications on the basis (1, i, j, k)
L_I = MonomialMatrix(4, (1, 0, 3, 2), (1, -1, 1, -1))
L_J = MonomialMatrix(4, (2, 3, 0, 1), (1, -1, -1, 1))
L_K = MonomialMatrix(4, (3, 2, 1, 0), (1, 1, -1, -1))


def _base(d0: int) -> Tuple[Tuple[int, int], List[MonomialMatrix], List[MonomialMatrix]]:
    """Base signature and (plus, minus) generator lists for a difference class."""
    if d0 == 0:
        return (1, 1), [SIGMA1], [EPS]
    if d0 == 2:
        return (2, 0), [SIGMA1, SIGMA3], []
    if d0 == 6:
        return (0, 2), [], [L_I, L_J]
    if d0 == 4:
        i8 = MonomialMatrix.identity(4)
        plus = [
            kron(SIGMA1, i8),
            kron(EPS, L_I),
            kron(EPS, L_J),
            kron(EPS, L_K),
        ]
        return (4, 0), plus, []
    raise AssertionError("no base for difference class %d" % d0)


def _double(plus: List[MonomialMatrix], minus: List[MonomialMatrix], dim: int):
    s3 = SIGMA3
    ident = MonomialMatrix.identity(dim)
    plus = [kron(g, s3) for g in plus] + [kron(ident, SIGMA1)]
    minus = [kron(g, s3) for g in minus] + [kron(ident, EPS)]
    return plus, minus


def _flip_up(plus, minus):
    """Turn the last four minus generators into plus generators."""
    block = minus[-4:]
    vol = mat_prod(block)
    plus = plus + [mat_mul(vol, g) for g in block]
    return plus, minus[:-4]


def _flip_down(plus, minus):
    block = plus[-4:]
    vol = mat_prod(block)
    minus = minus + [mat_mul(vol, g) for g in block]
    return plus[:-4], minus


def _volume(gammas: Sequence[MonomialMatrix]) -> MonomialMatrix:
    return mat_prod(list(gammas))


def _squares_to(m: MonomialMatrix, sign: int) -> bool:
    sq = mat_mul(m, m)
    return sq.is_diagonal() and all(s == sign for s in sq.signs)


def build_rep(sig: Signature) -> CliffordRep:
    """Construct monomial gammas for the signature, or refuse by obstruction."""
    p, q = sig.p, sig.q
    d = (p - q) % 8
    if d in (3, 5):
        raise CliffordConstructionError(
            "Cl%s has p-q = %d mod 8: its minimal representation is "
            "intrinsically complex, no real monomial construction" % (sig, d)
        )
    if (p + q) % 2 == 1:
        if d == 1:
            parent = build_rep(Signature(p - 1, q))
            omega = _volume(parent.gammas) if parent.gammas else MonomialMatrix.identity(1)
            if not _squares_to(omega, 1):
                raise CliffordConstructionError(
                    "volume element of Cl(%d,%d) squares to -1; cannot extend to Cl%s"
                    % (p - 1, q, sig)
                )
            plus = list(parent.gammas[: p - 1]) + [omega]
            minus = list(parent.gammas[p - 1:])
        elif d == 7:
            parent = build_rep(Signature(p, q - 1))
            omega = _volume(parent.gammas) if parent.gammas else MonomialMatrix.identity(1)
            if not _squares_to(omega, -1):
                raise CliffordConstructionError(
                    "volume element of Cl(%d,%d) squares to +1; cannot extend to Cl%s"
                    % (p, q - 1, sig)
                )
            plus = list(parent.gammas[:p])
            minus = list(parent.gammas[p:]) + [omega]
        else:
            raise CliffordConstructionError(
                "odd total dimension with p-q = %d mod 8 is not reachable" % d
            )
        rep = CliffordRep(sig, parent.dim, tuple(plus + minus), (1,) * p + (-1,) * q)
        verify_relations(rep)
        return rep

    # even total dimension
    (bp, bq), plus, minus = _base(d)
    if p == q == 0:
        return CliffordRep(sig, 1, (), ())
    flips = (p - q - (bp - bq)) // 8
    steps = (p + q - bp - bq) // 2
    if steps < 0:
        raise CliffordConstructionError("signature %s below the base case" % (sig,))
    dim = plus[0].dim if plus else minus[0].dim
    for _ in range(steps):
        plus, minus = _double(plus, minus, dim)
        dim *= 2
    for _ in range(abs(flips)):
        if flips > 0:
            if len(minus) < 4:
                raise CliffordConstructionError("flip needs four minus generators")
            plus, minus = _flip_up(plus, minus)
        else:
            if len(plus) < 4:
                raise CliffordConstructionError("flip needs four plus generators")
            plus, minus = _flip_down(plus, minus)
    if len(plus) != p or len(minus) != q:
        raise AssertionError("route planner produced the wrong signature")
    rep = CliffordRep(sig, dim, tuple(plus + minus), (1,) * p + (-1,) * q)
    verify_relations(rep)
    return rep


def verify_relations(rep: CliffordRep) -> None:
    """Exact anticommutator check for every generator pair."""
    n = rep.sig.total
    dim = rep.dim
    for i in range(n):
        gi = rep.gammas[i]
        sq = mat_mul(gi, gi)
        if not (sq.is_diagonal() and all(s == rep.metric[i] for s in sq.signs)):
            raise AssertionError("gamma_%d squares to the wrong value" % i)
        ri, si = gi.rows, gi.signs
        for j in range(i + 1, n):
            rj, sj = rep.gammas[j].rows, rep.gammas[j].signs
            for c in range(dim):
                if ri[rj[c]] != rj[ri[c]] or si[rj[c]] * sj[c] != -sj[ri[c]] * si[c]:
                    raise AssertionError("gamma_%d and gamma_%d fail to anticommute" % (i, j))


def chirality(rep: CliffordRep) -> MonomialMatrix:
    """Product of all gammas, sign-normalized; defined in even dimension."""
    if rep.sig.total % 2 == 1:
        raise ValueError("chirality needs an even total dimension")
    omega = _volume(rep.gammas)
    if omega.is_diagonal() and omega.signs[0] == -1:
        omega = omega.neg()
    return omega


def chiral_indices(rep: CliffordRep) -> Tuple[List[int], List[int]]:
    """Index sets of the two chiral halves, when they exist over the reals."""
    omega = chirality(rep)
    if not omega.is_diagonal():
        raise ValueError("chirality operator is not diagonal in this basis")
    if not _squares_to(omega, 1):
        raise ValueError(
            "chirality squares to -1 in signature %s; no real chiral split" % rep.sig
        )
    plus = [i for i in range(rep.dim) if omega.signs[i] == 1]
    minus = [i for i in range(rep.dim) if omega.signs[i] == -1]
    return plus, minus


def _normalize_sign(m: MonomialMatrix) -> MonomialMatrix:
    return m.neg() if m.signs[0] == -1 else m


def conjugation(rep: CliffordRep, transpose_sign: int) -> BilinearForm:
    """Find C with C g C^-1 = transpose_sign * g^T for every generator.

    Because the gammas are orthogonal signed permutations, plus generators
    are symmetric and minus generators antisymmetric, so C must commute or
    anticommute uniformly with each class; candidates are products of the
    plus block, the minus block, both, or neither, checked exactly.
    """
    if transpose_sign not in (1, -1):
        raise ValueError("transpose_sign must be +1 or -1")
    p, q = rep.sig.p, rep.sig.q
    t = transpose_sign
    candidates = []
    if (p == 0 or t == 1) and (q == 0 or t == -1):
        candidates.append(())
    if q > 0 and t == (-1) ** q:
        candidates.append(tuple(range(p, p + q)))
    if p > 0 and t == (-1) ** (p - 1):
        candidates.append(tuple(range(p)))
    if (q == 0 or p == 0) and p + q > 0 and (
        (q == 0 and t == (-1) ** (p + q - 1)) or (p == 0 and -t == (-1) ** (p + q - 1))
    ):
        candidates.append(tuple(range(p + q)))
    for subset in candidates:
        mats = [rep.gammas[i] for i in subset]
        c = mat_prod(mats) if mats else MonomialMatrix.identity(rep.dim)
        c = _normalize_sign(c)
        if _is_intertwiner(rep, c, t):
            ct = c.transpose()
            if ct == c:
                sym = 1
            elif ct == c.neg():
                sym = -1
            else:
                raise AssertionError("conjugation candidate is neither symmetric nor antisymmetric")
            return BilinearForm(c, sym, t)
    raise CliffordNoBilinearError(
        "no conjugation with transpose sign %+d exists in signature %s" % (t, rep.sig)
    )


def _is_intertwiner(rep: CliffordRep, c: MonomialMatrix, t: int) -> bool:
    for g in rep.gammas:
        lhs = mat_mul(c, g)
        rhs = mat_mul(g.transpose(), c)
        if t == -1:
            rhs = rhs.neg()
        if lhs != rhs:
            return False
    return True


_REALITY = {
    0: ("Majorana-Weyl", True),
    1: ("Majorana", False),
    2: ("Majorana", False),
    3: ("Dirac", False),
    4: ("symplectic-Majorana", False),
    5: ("symplectic-Majorana", False),
    6: ("symplectic-Majorana", False),
    7: ("Dirac", False),
}


def reality_class(sig: Signature) -> RealityClass:
    """Minimal-spinor reality type, a function of (p - q) mod 8 only."""
    name, chiral = _REALITY[(sig.p - sig.q) % 8]
    return RealityClass(name, chiral)


def _index_tuples(n: int, k: int):
    if k == 0:
        yield ()
        return
    idx = list(range(k))
    while True:
        yield tuple(idx)
        for pos in reversed(range(k)):
            if idx[pos] != pos + n - k:
                break
        else:
            return
        idx[pos] += 1
        for p2 in range(pos + 1, k):
            idx[p2] = idx[p2 - 1] + 1


def antisym_gamma(rep: CliffordRep, k: int) -> List[MonomialMatrix]:
    """Antisymmetrized k-fold gamma products, lexicographic in the indices.

    For distinct monomial generators the alternating sum collapses to the
    plain ordered product, so each output is again monomial.
    """
    if not 0 <= k <= rep.sig.total:
        raise ValueError("k out of range")
    out = []
    for idx in _index_tuples(rep.sig.total, k):
        if not idx:
            out.append(MonomialMatrix.identity(rep.dim))
        else:
            out.append(mat_prod([rep.gammas[i] for i in idx]))
    return out


def antisym_gamma_indexed(rep: CliffordRep, k: int):
    return list(zip(_index_tuples(rep.sig.total, k), antisym_gamma(rep, k)))


def fierz_residual(
    rep: CliffordRep,
    C: BilinearForm,
    k: int,
    psi: Sequence,
    block: Optional[Sequence[int]] = None,
) -> list:
    """Cubic contraction sum over gamma^(k) psi * (psi^T C gamma_(k) psi).

    Indices are raised with the diagonal metric.  ``block`` optionally embeds
    a chiral-length column at the given coordinate support.
    """
    if block is not None:
        full = [Q(0)] * rep.dim
        if len(psi) != len(block):
            raise ValueError("column does not match the chirality block")
        for pos, val in zip(block, psi):
            full[pos] = val
        psi = full
    if len(psi) != rep.dim:
        raise ValueError("spinor column has length %d, expected %d" % (len(psi), rep.dim))
    out = [Q(0)] * rep.dim
    for idx, gm in antisym_gamma_indexed(rep, k):
        raise_sign = 1
        for mu in idx:
            raise_sign *= rep.metric[mu]
        w = gm.apply(psi)
        s = dot(psi, C.C.apply(w))
        if s:
            coeff = raise_sign * s
            for i in range(rep.dim):
                if w[i]:
                    out[i] += coeff * w[i]
    return out
