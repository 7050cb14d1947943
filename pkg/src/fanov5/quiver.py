"""The 2-vertex, 3-arrow quiver: Euler form, Hom/Ext, King stability.

Representations are triples of d2 x d1 matrices over an exact field.  The
Euler form of the path algebra is

    <a, b> = a1*b1 + a2*b2 - 3*a1*b2 = dim Hom - dim Ext^1,

and the stability character used throughout is the Euler pairing against
the fixed dimension vector (5, 10), which works out to
theta(d) = 5*(d1 - d2).

Stability checks over a prime field are exhaustive: for every subspace W1
of the source, the theta-maximizing subrepresentation through W1 takes
W2 = A(W1) + B(W1) + C(W1), so enumerating pairs (W1, minimal W2) (plus
the one-dimensional targets that a zero W1 allows) finds a maximizing
witness or certifies stability.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Optional, Union

from .linalg import (
    Field,
    Matrix,
    PrimeField,
    QQ,
    field_for,
    mat_vec,
    matrix,
    rank,
    row_space_basis,
    subspaces,
)

ARROWS = 3
THETA_SOURCE = (5, 10)

DimVector = tuple[int, int]

STABILITY_FIELDS = (2, 3, 5)
STABILITY_DIM_CAP = 4


def euler_form(a: DimVector, b: DimVector) -> int:
    """<a, b> = a1 b1 + a2 b2 - 3 a1 b2."""
    return a[0] * b[0] + a[1] * b[1] - ARROWS * a[0] * b[1]


def theta(d: DimVector) -> int:
    """theta(d) = <(5,10), d> = 5 (d1 - d2)."""
    return euler_form(THETA_SOURCE, d)


def moduli_dim(d: DimVector) -> int:
    """Expected dimension 1 - <d, d> of the stable-representation moduli."""
    if d == (0, 0):
        raise ValueError("zero dimension vector has no moduli space")
    return 1 - euler_form(d, d)


@dataclass(frozen=True)
class QuiverRep:
    """Representation: three d2 x d1 matrices A, B, C over ``field``."""

    field: Field
    d: DimVector
    A: Matrix
    B: Matrix
    C: Matrix

    def __post_init__(self):
        d1, d2 = self.d
        if d1 < 0 or d2 < 0:
            raise ValueError(f"dimension vector must be nonnegative, got {self.d}")
        for name in ("A", "B", "C"):
            m = getattr(self, name)
            if len(m) != d2 or any(len(row) != d1 for row in m):
                raise ValueError(f"map {name} must be {d2}x{d1}")

    @property
    def maps(self) -> tuple[Matrix, Matrix, Matrix]:
        return (self.A, self.B, self.C)

    def to_json(self) -> str:
        tag: Union[int, str]
        tag = self.field.p if isinstance(self.field, PrimeField) else "rational"
        payload = {
            "q": tag,
            "d": list(self.d),
            "A": [[_entry_json(x) for x in row] for row in self.A],
            "B": [[_entry_json(x) for x in row] for row in self.B],
            "C": [[_entry_json(x) for x in row] for row in self.C],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    @staticmethod
    def from_json(text: str) -> "QuiverRep":
        payload = json.loads(text)
        field = field_for(payload["q"])
        d = (int(payload["d"][0]), int(payload["d"][1]))
        mats = {}
        for name in ("A", "B", "C"):
            rows = [[_entry_parse(x) for x in row] for row in payload[name]]
            if not rows:
                rows = [[] for _ in range(d[1])] if d[1] else []
            mats[name] = matrix(rows, field) if rows else ()
        return make_rep(field, d, mats["A"], mats["B"], mats["C"])


def _entry_json(x) -> Union[int, str]:
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    return int(x)


def _entry_parse(x):
    if isinstance(x, str):
        return Fraction(x)
    return x


def make_rep(field: Field, d: DimVector, A, B, C) -> QuiverRep:
    d1, d2 = d
    fix = lambda m: matrix(m, field) if d1 and d2 else tuple(() for _ in range(d2))
    return QuiverRep(field=field, d=d, A=fix(A), B=fix(B), C=fix(C))


def zero_rep(field: Field, d: DimVector) -> QuiverRep:
    d1, d2 = d
    z = [[0] * d1 for _ in range(d2)]
    return make_rep(field, d, z, z, z)


def random_rep(d: DimVector, field: Field, seed: int) -> QuiverRep:
    """Deterministic representation with uniform entries (ints in [-9,9] over Q)."""
    rng = Random(seed)
    d1, d2 = d

    def draw():
        if isinstance(field, PrimeField):
            return rng.randrange(field.p)
        return Fraction(rng.randint(-9, 9))

    mats = [[[draw() for _ in range(d1)] for _ in range(d2)] for _ in range(ARROWS)]
    return make_rep(field, d, *mats)


def direct_sum(x: QuiverRep, y: QuiverRep) -> QuiverRep:
    if x.field != y.field:
        raise ValueError("direct sum needs a common field")
    d = (x.d[0] + y.d[0], x.d[1] + y.d[1])
    mats = []
    for mx, my in zip(x.maps, y.maps):
        rows = []
        for row in mx:
            rows.append(list(row) + [0] * y.d[0])
        for row in my:
            rows.append([0] * x.d[0] + list(row))
        mats.append(rows)
    return make_rep(x.field, d, *mats)


def hom_ext(a: QuiverRep, b: QuiverRep) -> tuple[int, int]:
    """(dim Hom, dim Ext^1) from the canonical linear map.

    Hom and Ext^1 are kernel and cokernel of

        Hom(A1,B1) + Hom(A2,B2) -> sum over arrows of Hom(A1,B2),
        (f1, f2) |-> f2 . arrow_a - arrow_b . f1,

    so both drop out of one rank computation; the difference is the Euler
    form of the dimension vectors.
    """
    if a.field != b.field:
        raise ValueError("hom_ext needs both representations over the same field")
    field = a.field
    a1, a2 = a.d
    b1, b2 = b.d
    dom = a1 * b1 + a2 * b2
    cod = ARROWS * a1 * b2
    if dom == 0 or cod == 0:
        # The canonical map has rank 0, so kernel and cokernel are everything.
        return (dom, cod)
    rows = []
    for t in range(ARROWS):
        fa = a.maps[t]
        gb = b.maps[t]
        for r in range(b2):
            for c in range(a1):
                row = [0] * dom
                # phi2[r, s] * fa[s, c] over s in range(a2)
                for s in range(a2):
                    row[b1 * a1 + r * a2 + s] = fa[s][c]
                # -gb[r, s] * phi1[s, c] over s in range(b1)
                for s in range(b1):
                    row[s * a1 + c] = field.normalize(-gb[r][s])
                rows.append(row)
    rk = rank(rows, field)
    return (dom - rk, cod - rk)


class Stability(enum.Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly-semistable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class SubrepWitness:
    """A destabilizing (or theta-tying) subrepresentation."""

    basis1: Matrix
    basis2: Matrix
    theta: int

    @property
    def dims(self) -> DimVector:
        return (len(self.basis1), len(self.basis2))


@dataclass(frozen=True)
class StabilityVerdict:
    status: Stability
    witness: Optional[SubrepWitness] = None


def _image_basis(rep: QuiverRep, basis1: Matrix) -> Matrix:
    vectors = [mat_vec(m, v, rep.field) for v in basis1 for m in rep.maps]
    return row_space_basis(vectors, rep.field)


def _proper_candidates(rep: QuiverRep):
    """Theta-maximizing proper nonzero subrepresentations, one per source subspace."""
    field = rep.field
    d1, d2 = rep.d
    assert isinstance(field, PrimeField)
    for basis1 in subspaces(field, d1):
        basis2 = _image_basis(rep, basis1)
        w = (len(basis1), len(basis2))
        if w == (0, 0):
            # Any nonzero target subspace completes the zero source; take a line.
            if d2 > 0 and (d1, d2) != (0, 1):
                line = row_space_basis([(1,) + (0,) * (d2 - 1)], field)
                yield SubrepWitness(basis1=(), basis2=line, theta=-5)
            continue
        if w == (d1, d2):
            continue
        yield SubrepWitness(basis1=basis1, basis2=basis2, theta=theta(w))


def check_stability(rep: QuiverRep) -> StabilityVerdict:
    """King verdict for theta over a prime field, by exhaustive enumeration.

    Proper nonzero subrepresentations W are compared by theta against the
    whole representation; the returned witness maximizes theta.  The search
    space is cut down to minimal-W2 candidates, which is lossless because
    enlarging W2 only lowers theta.
    """
    field = rep.field
    if not isinstance(field, PrimeField):
        raise ValueError("exhaustive stability needs a finite prime field")
    if field.p not in STABILITY_FIELDS:
        raise ValueError(f"supported fields are F_q for q in {STABILITY_FIELDS}")
    if max(rep.d) > STABILITY_DIM_CAP:
        raise ValueError(f"dimensions capped at {STABILITY_DIM_CAP} for enumeration")

    theta_v = theta(rep.d)
    best: Optional[SubrepWitness] = None
    for cand in _proper_candidates(rep):
        if best is None or cand.theta > best.theta:
            best = cand
    if best is None or best.theta < theta_v:
        return StabilityVerdict(status=Stability.STABLE)
    if best.theta == theta_v:
        return StabilityVerdict(status=Stability.STRICTLY_SEMISTABLE, witness=best)
    return StabilityVerdict(status=Stability.UNSTABLE, witness=best)


def check_stability_pairs(rep: QuiverRep) -> StabilityVerdict:
    """Independent oracle: enumerate subrepresentations as raw pairs (W1, W2)."""
    field = rep.field
    if not isinstance(field, PrimeField):
        raise ValueError("pair enumeration needs a finite prime field")
    d1, d2 = rep.d
    theta_v = theta(rep.d)
    best: Optional[SubrepWitness] = None
    for basis1 in subspaces(field, d1):
        image = _image_basis(rep, basis1)
        for basis2 in subspaces(field, d2):
            w = (len(basis1), len(basis2))
            if w == (0, 0) or w == (d1, d2):
                continue
            if rank(list(basis2) + list(image), field) != len(basis2):
                continue  # image not contained in W2: not a subrepresentation
            t = theta(w)
            if best is None or t > best.theta:
                best = SubrepWitness(basis1=basis1, basis2=basis2, theta=t)
    if best is None or best.theta < theta_v:
        return StabilityVerdict(status=Stability.STABLE)
    if best.theta == theta_v:
        return StabilityVerdict(status=Stability.STRICTLY_SEMISTABLE, witness=best)
    return StabilityVerdict(status=Stability.UNSTABLE, witness=best)


@dataclass(frozen=True)
class RationalCertificate:
    """Non-exhaustive stability evidence for a rational representation."""

    trials: int
    violation: Optional[SubrepWitness]

    @property
    def consistent_with_stable(self) -> bool:
        return self.violation is None


def sample_stability_certificate(
    rep: QuiverRep, trials: int = 200, seed: int = 0
) -> RationalCertificate:
    """Sample random source subspaces over Q looking for theta >= theta(rep).

    Finding a violating subrepresentation disproves stability; finding none
    proves nothing (the certificate is explicitly non-exhaustive).
    """
    if rep.field != QQ:
        raise ValueError("sampling certificate is for rational representations")
    rng = Random(seed)
    d1, _ = rep.d
    theta_v = theta(rep.d)
    worst: Optional[SubrepWitness] = None
    for _ in range(trials):
        k = rng.randint(0, d1)
        raw = [[Fraction(rng.randint(-5, 5)) for _ in range(d1)] for _ in range(k)]
        basis1 = row_space_basis(raw, QQ)
        basis2 = _image_basis(rep, basis1)
        w = (len(basis1), len(basis2))
        if w == (0, 0) or w == rep.d:
            continue
        t = theta(w)
        if t >= theta_v and (worst is None or t > worst.theta):
            worst = SubrepWitness(basis1=basis1, basis2=basis2, theta=t)
    return RationalCertificate(trials=trials, violation=worst)
