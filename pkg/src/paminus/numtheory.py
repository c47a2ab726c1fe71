"""Exact arithmetic: 2-adic valuations, lcm windows, odd/even certificates,
reduced fraction sums, the two bounding inequalities, and brute-force
counterexample searches (whose expected outcome is always "absent").

Rationals are stdlib ``fractions.Fraction`` values: arbitrary precision,
eagerly reduced, so integrality is exactly ``denominator == 1``.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

Rational = Fraction


class DomainError(ValueError):
    """Argument outside the operation's domain."""


class PreconditionError(ValueError):
    """A checked precondition failed; ``index`` names the offending entry."""

    def __init__(self, message: str, index: int | None = None):
        self.index = index
        super().__init__(message)


def v2(n: int) -> int:
    """Largest a with 2**a dividing n; n must be positive."""
    if n < 1:
        raise DomainError(f"v2 needs n >= 1, got {n}")
    return (n & -n).bit_length() - 1


def lcm_range(n: int, k: int) -> int:
    """lcm of the k+1 consecutive integers n, n+1, ..., n+k."""
    if n < 1 or k < 1:
        raise DomainError("lcm_range needs n >= 1 and k >= 1")
    return math.lcm(*range(n, n + k + 1))


@dataclass(frozen=True)
class KurschakCertificate:
    """Witness that exactly one of n..n+k carries the maximal power of 2.

    ``valuations[i]`` is v2(lcm / (n+i)): zero exactly at ``unique_index``
    and >= 1 everywhere else, which is what forces any cleared-denominator
    sum with coprime numerators to equate an odd and an even number.
    """

    n: int
    k: int
    a: int
    unique_index: int
    lcm: int
    valuations: tuple[int, ...]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "a": self.a,
            "unique_index": self.unique_index,
            "lcm": self.lcm,
            "valuations": list(self.valuations),
        }


def kurschak_certificate(n: int, k: int) -> KurschakCertificate:
    """Build and verify the certificate for the window n..n+k."""
    if n < 1 or k < 1:
        raise DomainError("kurschak_certificate needs n >= 1 and k >= 1")
    vals = [v2(n + i) for i in range(k + 1)]
    a = max(vals)
    winners = [i for i, v in enumerate(vals) if v == a]
    if len(winners) != 1:
        # would contradict the uniqueness of the maximal 2-adic valuation
        raise RuntimeError(
            f"maximal valuation {a} attained {len(winners)} times in "
            f"[{n}, {n + k}]"
        )
    l = lcm_range(n, k)
    quotient_vals = tuple(v2(l // (n + i)) for i in range(k + 1))
    i_star = winners[0]
    if v2(l) != a or quotient_vals[i_star] != 0 or any(
        q < 1 for i, q in enumerate(quotient_vals) if i != i_star
    ):
        raise RuntimeError(f"certificate invariants failed for ({n}, {k})")
    return KurschakCertificate(n, k, a, i_star, l, quotient_vals)


def unique_valuation_violations(n_max: int, k_max: int) -> list[tuple[int, int]]:
    """Scan every window [n, n+k], n <= n_max, k <= k_max, for ties in the
    maximal 2-adic valuation; returns the offending (n, k) pairs (none
    expected)."""
    top = n_max + k_max
    vs = [0] * (top + 1)
    for x in range(1, top + 1):
        vs[x] = (x & -x).bit_length() - 1
    bad = []
    for n in range(1, n_max + 1):
        best = vs[n]
        count = 1
        for k in range(1, k_max + 1):
            v = vs[n + k]
            if v > best:
                best, count = v, 1
            elif v == best:
                count += 1
            if count > 1:
                bad.append((n, k))
    return bad


def fraction_sum(n: int, k: int, m: Sequence[int]) -> Fraction:
    """Exact value of m_0/n + m_1/(n+1) + ... + m_k/(n+k).

    Each numerator must satisfy 1 <= m_i <= n+i and gcd(m_i, n+i) = 1
    (checked; the upper boundary only ever admits m_i = n+i = 1).
    """
    if n < 1 or k < 1:
        raise DomainError("fraction_sum needs n >= 1 and k >= 1")
    ms = tuple(m)
    if len(ms) != k + 1:
        raise PreconditionError(
            f"need {k + 1} numerators, got {len(ms)}"
        )
    for i, mi in enumerate(ms):
        d = n + i
        if not 1 <= mi <= d:
            raise PreconditionError(
                f"numerator {mi} at index {i} outside [1, {d}]", index=i
            )
        if math.gcd(mi, d) != 1:
            raise PreconditionError(
                f"numerator {mi} at index {i} not coprime to {d}", index=i
            )
    return sum((Fraction(mi, n + i) for i, mi in enumerate(ms)), Fraction(0))


def is_integer(r: Fraction) -> bool:
    return r.denominator == 1


def nagell_sum(m: int, n: int, k: int) -> Fraction:
    """Exact value of 1/m + 1/(m+n) + ... + 1/(m+kn)."""
    if m < 1 or n < 1 or k < 1:
        raise DomainError("nagell_sum needs m, n, k >= 1")
    return sum((Fraction(1, m + i * n) for i in range(k + 1)), Fraction(0))


@dataclass(frozen=True)
class SearchOutcome:
    params: dict
    mode: str  # "exhaustive" | "sampled"
    instances_checked: int
    counterexample: Optional[dict]

    @property
    def found(self) -> bool:
        return self.counterexample is not None

    def as_dict(self) -> dict:
        return {
            "params": self.params,
            "mode": self.mode,
            "instances_checked": self.instances_checked,
            "counterexample": self.counterexample,
        }


def _chunks(items: list, parts: int) -> list[list]:
    parts = max(1, min(parts, len(items) or 1))
    size = -(-len(items) // parts)
    return [items[i : i + size] for i in range(0, len(items), size)]


def _coprime_residues(d: int) -> list[int]:
    return [r for r in range(1, d) if math.gcd(r, d) == 1]


def _harmonic_scan(k, ns, exhaustive_m, samples, cap, seed):
    instances = 0
    sampled = False
    hits = []
    for n in ns:
        denoms = [n + i for i in range(k + 1)]
        pools = [_coprime_residues(d) for d in denoms]
        if any(not pool for pool in pools):
            continue  # n = 1 has no admissible numerator below it
        product = math.prod(denoms)
        cofactors = [product // d for d in denoms]
        space = math.prod(len(pool) for pool in pools)
        if exhaustive_m and space <= cap:
            for combo in itertools.product(*pools):
                instances += 1
                total = sum(mi * ci for mi, ci in zip(combo, cofactors))
                if total % product == 0:
                    hits.append((n, list(combo), total // product))
                    break
        else:
            sampled = True
            rng = random.Random(f"{seed}:{k}:{n}")
            for _ in range(samples):
                combo = tuple(rng.choice(pool) for pool in pools)
                instances += 1
                total = sum(mi * ci for mi, ci in zip(combo, cofactors))
                if total % product == 0:
                    hits.append((n, list(combo), total // product))
                    break
    return instances, sampled, hits


def search_harmonic_counterexample(
    k: int,
    n_max: int,
    exhaustive_m: bool = True,
    *,
    samples: int = 1000,
    cap: int = 10**7,
    seed: int = 0,
    threads: int = 1,
) -> SearchOutcome:
    """Look for a coprime numerator vector whose consecutive-denominator sum
    is an integer: Σ m_i · Π_{j≠i}(n+j) divisible by Π(n+j), with
    1 <= m_i < n+i and gcd(m_i, n+i) = 1, over n in [1, n_max].

    Exhaustive per n unless the vector space exceeds ``cap`` (or
    ``exhaustive_m`` is off), in which case ``samples`` seeded vectors are
    drawn; the report's mode records whether any sampling happened.
    Results are independent of ``threads``.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    ns = list(range(1, n_max + 1))
    params = {
        "k": k,
        "n_max": n_max,
        "exhaustive_m": exhaustive_m,
        "samples": samples,
        "cap": cap,
        "seed": seed,
    }

    def run(chunk):
        return _harmonic_scan(k, chunk, exhaustive_m, samples, cap, seed)

    if threads <= 1 or len(ns) <= 1:
        results = [run(ns)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(run, _chunks(ns, threads)))
    instances = sum(r[0] for r in results)
    sampled = any(r[1] for r in results)
    hits = [h for r in results for h in r[2]]
    counterexample = None
    if hits:
        n, m, p = min(hits, key=lambda h: (h[0], h[1]))
        counterexample = {"n": n, "m": m, "p": p}
    return SearchOutcome(
        params=params,
        mode="sampled" if sampled else "exhaustive",
        instances_checked=instances,
        counterexample=counterexample,
    )


def search_nagell_counterexample(
    k: int, m_max: int, n_max: int, *, threads: int = 1
) -> SearchOutcome:
    """Exhaustively test is_integer(nagell_sum(m, n, k)) over the grid
    m <= m_max, n <= n_max; absent is the expected outcome."""
    if k < 1:
        raise DomainError("k must be >= 1")
    ms = list(range(1, m_max + 1))
    params = {"k": k, "m_max": m_max, "n_max": n_max}

    def run(chunk):
        hits = []
        for m in chunk:
            for n in range(1, n_max + 1):
                s = nagell_sum(m, n, k)
                if is_integer(s):
                    hits.append((m, n, s))
        return hits

    if threads <= 1 or len(ms) <= 1:
        results = [run(ms)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(run, _chunks(ms, threads)))
    hits = [h for r in results for h in r]
    counterexample = None
    if hits:
        m, n, s = min(hits, key=lambda h: (h[0], h[1]))
        counterexample = {"m": m, "n": n, "sum": str(s)}
    return SearchOutcome(
        params=params,
        mode="exhaustive",
        instances_checked=m_max * n_max,
        counterexample=counterexample,
    )


def _progression(m: int, n: int, k: int) -> list[int]:
    return [m + j * n for j in range(k + 1)]


def _sum_excluding_one(terms: list[int]) -> int:
    total = math.prod(terms)
    return sum(total // t for t in terms)


def nagell_small_m_bound(m: int, n: int, k: int) -> bool:
    """Check Σ_i Π_{j≠i}(m+jn) < m · Π_{j=1..k}(m+jn), which kills the
    progression equation outright whenever m > k."""
    if m < 1 or n < 1 or k < 1:
        raise DomainError("nagell_small_m_bound needs m, n, k >= 1")
    if m <= k:
        raise PreconditionError(f"requires m > k, got m={m}, k={k}")
    terms = _progression(m, n, k)
    return _sum_excluding_one(terms) < m * math.prod(terms[1:])


def nagell_major_sides(m: int, n: int, k: int) -> tuple[int, int]:
    """Both sides of the majorization Σ_i Π_{j≠i}(m+jn) <= Π_{j=1..k}(m+jn)
    + k·m·Π_{j=2..k}(m+jn); equality holds exactly for k = 1."""
    if m < 1 or n < 1 or k < 1:
        raise DomainError("nagell_major_sides needs m, n, k >= 1")
    terms = _progression(m, n, k)
    lhs = _sum_excluding_one(terms)
    rhs = math.prod(terms[1:]) + k * m * math.prod(terms[2:])
    return lhs, rhs


def nagell_major_bound(m: int, n: int, k: int) -> bool:
    lhs, rhs = nagell_major_sides(m, n, k)
    return lhs <= rhs


def bezout_witness(m: int, c: int) -> Optional[tuple[int, int]]:
    """Naturals (a, b) with m·a = c·b + 1, present iff gcd(m, c) = 1.

    Computed with the modular inverse and normalized to 1 <= a <= c for
    c > 1; for c = 1 the witness is (1, m-1).
    """
    if m < 1 or c < 1:
        raise DomainError("bezout_witness needs m, c >= 1")
    if math.gcd(m, c) != 1:
        return None
    if c == 1:
        return (1, m - 1)
    a = pow(m, -1, c)
    return (a, (m * a - 1) // c)
