"""Weight q-multiplicities for g2.

The closed route evaluates at most five partition terms P, Q, R, S, T
selected by sign conditions on six affine integers a..f of the weight
pair; the oracle route runs the full 12-term alternating Weyl sum. Both
recover the classical multiplicity at q = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping

from .errors import InternalConsistencyError
from .g2_partition import partition_tarski, qpartition
from .qpoly import QPoly
from .rootsys import FundCoord, RootCoord, sigma_shift, weyl_group

TERM_NAMES = ("P", "Q", "R", "S", "T")
TERM_SIGNS: Mapping[str, int] = {"P": 1, "Q": -1, "R": -1, "S": 1, "T": 1}

# The eight admissible case labels and the terms each one combines.
CASE_TERMS: Mapping[str, tuple[str, ...]] = {
    "PQRST": ("P", "Q", "R", "S", "T"),
    "PQRS": ("P", "Q", "R", "S"),
    "PQRT": ("P", "Q", "R", "T"),
    "PQR": ("P", "Q", "R"),
    "PQ": ("P", "Q"),
    "PR": ("P", "R"),
    "P": ("P",),
    "ZERO": (),
}


def signature(terms: tuple[str, ...]) -> str:
    """Render a term subset as a signed formula string, e.g. "P-Q-R+S+T"."""
    if not terms:
        return "0"
    parts = []
    for name in terms:
        if TERM_SIGNS[name] > 0:
            parts.append(f"+{name}" if parts else name)
        else:
            parts.append(f"-{name}")
    return "".join(parts)


ALLOWED_SIGNATURES = frozenset(signature(terms) for terms in CASE_TERMS.values())


@dataclass(frozen=True)
class CaseData:
    """The six case integers for a weight pair, with their sign pattern."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    in_n: tuple[bool, bool, bool, bool, bool, bool]
    case_label: str

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)


def _case_label(in_n: tuple[bool, ...]) -> str:
    a_ok, b_ok, c_ok, d_ok, e_ok, f_ok = in_n
    if not (a_ok and b_ok):
        return "ZERO"
    if c_ok and d_ok:
        if e_ok and f_ok:
            return "PQRST"
        if e_ok:
            return "PQRS"
        if f_ok:
            return "PQRT"
        return "PQR"
    if c_ok and not d_ok and not e_ok and not f_ok:
        return "PQ"
    if d_ok and not c_ok and not e_ok and not f_ok:
        return "PR"
    if not c_ok and not d_ok and not e_ok and not f_ok:
        return "P"
    # No dominant pair realizes the remaining sign patterns; should one ever
    # appear, all five terms are provably trivial there.
    return "ZERO"


def compute_abcdef(lam: FundCoord, mu: FundCoord) -> CaseData:
    """The affine case integers of (lam, mu) and the case they select."""
    m, n = lam
    x, y = mu
    a = 2 * m + 3 * n - 2 * x - 3 * y
    b = m + 2 * n - x - 2 * y
    c = m + 3 * n - 2 * x - 3 * y - 1
    d = m + n - x - 2 * y - 1
    e = n - x - 2 * y - 2
    f = m - 2 * x - 3 * y - 4
    in_n = tuple(value >= 0 for value in (a, b, c, d, e, f))
    return CaseData(a, b, c, d, e, f, in_n, _case_label(in_n))


def term_coords(name: str, case: CaseData) -> RootCoord:
    """Root coordinates of the partition argument behind one term."""
    if name == "P":
        return RootCoord(case.a, case.b)
    if name == "Q":
        return RootCoord(case.c, case.b)
    if name == "R":
        return RootCoord(case.a, case.d)
    if name == "S":
        return RootCoord(case.c, case.e)
    if name == "T":
        return RootCoord(case.f, case.d)
    raise ValueError(f"unknown term {name!r}")


def active_terms(case: CaseData) -> tuple[str, ...]:
    """Terms whose partition argument has both coordinates nonnegative.

    Exactly these terms contribute a nonzero polynomial, since any weight
    with nonnegative root coordinates has at least its all-simple-roots
    decomposition.
    """
    return tuple(
        name
        for name in TERM_NAMES
        if term_coords(name, case).c1 >= 0 and term_coords(name, case).c2 >= 0
    )


@dataclass(frozen=True)
class MultiplicityResult:
    """Full provenance of one closed-formula evaluation."""

    lam: FundCoord
    mu: FundCoord
    case: CaseData
    terms: Mapping[str, QPoly]
    mq: QPoly
    m_at_one: int


def qmultiplicity_closed(lam: FundCoord, mu: FundCoord) -> MultiplicityResult:
    """m_q(lam, mu) via the case-selected combination of partition terms."""
    case = compute_abcdef(lam, mu)
    terms = {
        name: qpartition(term_coords(name, case))
        for name in CASE_TERMS[case.case_label]
    }
    mq = QPoly()
    for name, poly in terms.items():
        mq = mq + poly if TERM_SIGNS[name] > 0 else mq - poly
    if any(coeff < 0 for coeff in mq.coeffs):
        raise InternalConsistencyError(
            f"negative coefficient in m_q({tuple(lam)}, {tuple(mu)}) = {mq!r}"
        )
    return MultiplicityResult(lam, mu, case, terms, mq, mq.eval_at_one())


def qmultiplicity_weyl_sum(lam: FundCoord, mu: FundCoord) -> QPoly:
    """m_q(lam, mu) as the alternating sum over all 12 Weyl elements."""
    total = QPoly()
    for sigma in weyl_group():
        term = qpartition(sigma_shift(sigma, lam, mu))
        total = total + term if sigma.sign > 0 else total - term
    return total


def multiplicity(lam: FundCoord, mu: FundCoord, method: str = "qpoly") -> int:
    """Classical weight multiplicity m(lam, mu).

    method="qpoly" evaluates the q-polynomial route at q = 1; "tarski"
    combines Tarski's integer partition values case by case instead.
    """
    if method == "qpoly":
        return qmultiplicity_closed(lam, mu).m_at_one
    if method == "tarski":
        case = compute_abcdef(lam, mu)
        return sum(
            TERM_SIGNS[name] * partition_tarski(term_coords(name, case))
            for name in CASE_TERMS[case.case_label]
        )
    raise ValueError(f"unknown method {method!r}, expected 'qpoly' or 'tarski'")


@dataclass(frozen=True)
class AuditReport:
    """Which signed term combinations actually occur on a dominant grid."""

    grid_max: int
    observed_signatures: tuple[str, ...]
    counterexamples: tuple[tuple[tuple[int, int, int, int], str], ...]

    def to_json_dict(self) -> dict:
        return {
            "grid_max": self.grid_max,
            "observed_signatures": list(self.observed_signatures),
            "counterexamples": [
                {"tuple": list(point), "signature": sig}
                for point, sig in self.counterexamples
            ],
        }


def audit_cases(grid_max: int) -> AuditReport:
    """Scan all (m, n, x, y) in [0, grid_max]^4 for realized signatures.

    For each tuple the report records which of P, Q, R, S, T contribute a
    nonzero polynomial; any signed combination outside the eight admissible
    ones is returned as a counterexample.
    """
    if grid_max < 0:
        raise ValueError("grid_max must be nonnegative")
    observed: set[str] = set()
    bad: list[tuple[tuple[int, int, int, int], str]] = []
    for m, n, x, y in product(range(grid_max + 1), repeat=4):
        case = compute_abcdef(FundCoord(m, n), FundCoord(x, y))
        sig = signature(active_terms(case))
        observed.add(sig)
        if sig not in ALLOWED_SIGNATURES:
            bad.append(((m, n, x, y), sig))
    return AuditReport(grid_max, tuple(sorted(observed)), tuple(bad))
